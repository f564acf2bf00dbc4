#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubeloop {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvariant = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitIo = 3;

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeloop

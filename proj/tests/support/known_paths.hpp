#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace known {

struct Named {
  std::string name;
  int dim;
  std::string word;
};

inline void PrintTo(const Named& p, std::ostream* os) { *os << p.name << " " << p.word; }

// The eight-edge paths in R^4, then the longer embedded ones.
inline const std::vector<Named> kR4 = {
    {"gamma1", 4, "12314243"}, {"gamma2", 4, "12314342"},   {"gamma3", 4, "12314234"},
    {"gamma4", 4, "12314324"}, {"gamma5", 4, "12341234"},   {"gamma6", 4, "12321434"},
    {"gamma7", 4, "1231413214"}, {"gamma8", 4, "123214123214"},
};

inline const std::vector<Named> kR3 = {
    {"clp", 3, "121323"},
    {"d", 3, "123123"},
    {"gp", 3, "12321232"},
};

inline const Named kOddNonOrientable{"odd5", 5, "145231425232"};
inline const Named kLongR4{"long14", 4, "13234121321432"};

}  // namespace known

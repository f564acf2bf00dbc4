#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubeloop {

enum class ErrorCode {
  DimensionMismatch,
  DimensionOutOfRange,
  NotInU,
  BadLabel,
  BadWord,
  OddLength,
  NotClosed,
  NotEmbedded,
  MissingDirection,
  BadEdgeIndex,
  NotParallel,
  SameEdge,
  BadVector,
  SurfaceNotEmbedded,
  BadParameters,
  BadQuery,
  BadProjection,
  UnsupportedFormat,
};

std::string_view to_string(ErrorCode code);

// User-facing failure: bad input, violated precondition.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

// A proven identity failed to hold (oracle disagreement, missing witness).
// Seeing one of these means a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
  explicit InvariantViolation(const std::string& what) : std::logic_error(what) {}
};

}  // namespace cubeloop

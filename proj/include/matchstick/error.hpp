#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace matchstick {

enum class ErrorCode {
  DegenerateSegment,
  NotARhombus,
  UnknownEdge,
  AmbiguousAngles,
  Disconnected,
  InfeasibleRadius,
  MissingRadius,
  NonpositiveRadius,
  NotMonotone,
  NotReduced,
  AmbiguousHull,
  Unreachable,
  BudgetExceeded,
  InvalidArgument,
  FormatError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code is stable and is what the CLI prints in its JSON error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace matchstick

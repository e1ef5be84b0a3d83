#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace crescent {

enum class ErrorKind {
  InvalidArgument,
  IndexOutOfRange,
  DuplicateIndex,
  DegenerateSimplex,
  PrerequisiteViolated,
  DistanceCollision,
  DegenerateTriangle,
  RetryBudgetExhausted,
  CoincidentPoints,
  RegionTooSmall,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by this library carries one of the kinds above so
// callers (and the CLI exit-code mapping) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace crescent

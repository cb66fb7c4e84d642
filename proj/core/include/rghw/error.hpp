#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rghw {

enum class ErrorCode {
  NotAPrimePower,
  FieldTooLarge,
  DivisionByZero,
  FieldMismatch,
  ShapeMismatch,
  InvalidShape,
  InvalidBand,
  RankOutOfRange,
  CountOutOfRange,
  DegreeTooHigh,
  DegreeOutOfRange,
  PointOutOfBox,
  SubsetTooLarge,
  DuplicateElements,
  LengthMismatch,
  EmptyFamily,
  InvalidNesting,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Precondition or domain violation. The code identifies which contract was
/// broken; what() carries a human-readable description of the constraint.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the oracles when an enumeration cap is hit. Never carries a
/// partial numeric answer.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::uint64_t states_explored, const std::string& message)
      : std::runtime_error(message), states_explored_(states_explored) {}

  std::uint64_t states_explored() const noexcept { return states_explored_; }

 private:
  std::uint64_t states_explored_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace rghw

#pragma once

#include <stdexcept>
#include <string>

namespace headorder {

enum class ErrorKind {
  DiagonalNonzero,
  TriangleViolation,
  NotReduced,
  ShapeMismatch,
  StepBudgetExceeded,
  OutOfRange,
  NotACycle,
  NotATree,
  BadRotation,
  NotCoprime,
  TruncationTooSmall,
  RankCapExceeded,
  InvalidBlock,
  InvalidArgument,
  Overflow,
  SchemaError,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; `kind()` discriminates.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace headorder

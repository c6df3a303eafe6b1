#include "headorder/error.hpp"

namespace headorder {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DiagonalNonzero: return "DiagonalNonzero";
    case ErrorKind::TriangleViolation: return "TriangleViolation";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BadRotation: return "BadRotation";
    case ErrorKind::NotCoprime: return "NotCoprime";
    case ErrorKind::TruncationTooSmall: return "TruncationTooSmall";
    case ErrorKind::RankCapExceeded: return "RankCapExceeded";
    case ErrorKind::InvalidBlock: return "InvalidBlock";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Overflow: return "Overflow";
    case ErrorKind::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

}  // namespace headorder

#include "lipkr/error.hpp"

namespace lipkr {

const char* code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::NonPositiveDistance: return "NonPositiveDistance";
    case ErrorCode::TriangleViolation: return "TriangleViolation";
    case ErrorCode::EntryOutOfRange: return "EntryOutOfRange";
    case ErrorCode::RetryLimitExceeded: return "RetryLimitExceeded";
    case ErrorCode::NotStrict: return "NotStrict";
    case ErrorCode::NotGeneric: return "NotGeneric";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::SupplyMismatch: return "SupplyMismatch";
    case ErrorCode::UnknownPoint: return "UnknownPoint";
    case ErrorCode::NotAdmissible: return "NotAdmissible";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::BadOrientation: return "BadOrientation";
    case ErrorCode::SamePoint: return "SamePoint";
    case ErrorCode::NotBalanced: return "NotBalanced";
    case ErrorCode::RegularityViolation: return "RegularityViolation";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::InternalContradiction: return "InternalContradiction";
    case ErrorCode::NotWhite: return "NotWhite";
    case ErrorCode::SizeMismatch: return "SizeMismatch";
    case ErrorCode::EmptyPart: return "EmptyPart";
  }
  return "UnknownError";
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::BudgetExceeded:
      return 4;
    default:
      return 3;
  }
}

}  // namespace lipkr

#pragma once

#include <stdexcept>
#include <string>

namespace lipkr {

enum class ErrorCode {
  ParseError,
  InvalidArgument,
  NotSymmetric,
  NonPositiveDistance,
  TriangleViolation,
  EntryOutOfRange,
  RetryLimitExceeded,
  NotStrict,
  NotGeneric,
  BudgetExceeded,
  SupplyMismatch,
  UnknownPoint,
  NotAdmissible,
  NotATree,
  BadOrientation,
  SamePoint,
  NotBalanced,
  RegularityViolation,
  FormulaMismatch,
  ArityMismatch,
  InternalContradiction,
  NotWhite,
  SizeMismatch,
  EmptyPart,
};

const char* code_name(ErrorCode code);

// Process exit code contract: 2 malformed input, 3 domain violation, 4 budget.
int exit_code_for(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lipkr

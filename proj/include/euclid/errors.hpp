#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace euclid {

enum class ErrorCode {
  DomainMismatch,
  InvalidDomain,
  InvalidWindow,
  IncompatibleFunction,
  InvalidFunction,
  EvalAtZero,
  PrecisionExhausted,
  RangeExceeded,
  DivisionByZero,
  WindowRequired,
  IdentityFails,
  NonUniqueStep,
  NonUnitRemainder,
  NoDescent,
  BudgetZero,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to a structured diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace euclid

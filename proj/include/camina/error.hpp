#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace camina {

enum class ErrorCode {
  ClosureExceedsCap,
  InvalidPermutation,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotLatinSquare,
  NotNormal,
  CentralElement,
  NotApplicable,
  InternalPrimeSearchFailed,
  InvalidPairTarget,
  EquivalenceViolation,
  SyntaxError,
  OrderMismatch,
  DuplicateId,
  UnsupportedParameters,
  UnknownGroupId,
  InternalError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (and the CLI exit-code mapping) can branch on the kind.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

}  // namespace camina

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperdelta {

enum class ErrorCode {
  ZeroDivision,
  NotOrdered,
  NotFinite,
  SeedDomain,
  NoSolution,
  UnsupportedWindow,
  NeedsLog,
  UnsupportedFunction,
  DomainError,
  NoConvergence,
  PoleMisdeclared,
  NonMonotone,
  StepTooLarge,
  NotConvergent,
  SyntaxError,
  NonRationalExponent,
};

std::string_view to_string(ErrorCode code);

/// Base exception for every computation failure in the library. The code is
/// stable and is what callers (and the CLI exit-code mapping) dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hyperdelta

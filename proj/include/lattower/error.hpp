#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lattower {

enum class ErrorKind {
  DegreeTooSmall,
  DegreeTooLarge,
  NegativeExponent,
  ParseError,
  ChainLengthMismatch,
  WidthMismatch,
  BadCoordinate,
  UnitVectorInH,
  DeadCoordinate,
  IllegalChainPosition,
  InvalidProfile,
  SpecMismatch,
  TooLarge,
  NotMixed,
  ClassViolation,
  NotTowerGroup,
  NonTermination,
  Mismatch,
};

std::string_view to_string(ErrorKind kind);

/// Every failure in the library is reported as an Error carrying a kind that
/// callers (the CLI in particular) can dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lattower

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ialg {

enum class ErrorKind {
  InfiniteCarrier,
  CarrierMismatch,
  ClosureViolation,
  NoIdentity,
  NoAbsorber,
  NoAbsorberInComponent,
  NonResiduePair,
  BadLoopParams,
  DegreeTooLarge,
  NonSquareMul,
  UnsupportedBase,
  NotLatin,
  BudgetExceeded,
  UnknownClaim,
  RangeTooLarge,
  BadN,
  ArityMismatch,
  OrderTooLarge,
  ParseError,
  UndefinedName,
  IoError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to a stable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace ialg

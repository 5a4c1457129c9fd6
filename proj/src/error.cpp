#include "ialg/error.hpp"

namespace ialg {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InfiniteCarrier: return "InfiniteCarrier";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::ClosureViolation: return "ClosureViolation";
    case ErrorKind::NoIdentity: return "NoIdentity";
    case ErrorKind::NoAbsorber: return "NoAbsorber";
    case ErrorKind::NoAbsorberInComponent: return "NoAbsorberInComponent";
    case ErrorKind::NonResiduePair: return "NonResiduePair";
    case ErrorKind::BadLoopParams: return "BadLoopParams";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NonSquareMul: return "NonSquareMul";
    case ErrorKind::UnsupportedBase: return "UnsupportedBase";
    case ErrorKind::NotLatin: return "NotLatin";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnknownClaim: return "UnknownClaim";
    case ErrorKind::RangeTooLarge: return "RangeTooLarge";
    case ErrorKind::BadN: return "BadN";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::OrderTooLarge: return "OrderTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UndefinedName: return "UndefinedName";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace ialg

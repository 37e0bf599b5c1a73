#include "susa/error.hpp"

namespace susa {

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedDigit: return "MalformedDigit";
    case ErrorKind::MalformedNumeral: return "MalformedNumeral";
    case ErrorKind::NotFinite: return "NotFinite";
    case ErrorKind::NonRegular: return "NonRegular";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroInput: return "ZeroInput";
    case ErrorKind::NegativeRadicand: return "NegativeRadicand";
    case ErrorKind::MissingConstant: return "MissingConstant";
    case ErrorKind::PerfectSquare: return "PerfectSquare";
    case ErrorKind::NonPositive: return "NonPositive";
    case ErrorKind::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorKind::IrrationalCompletedSquare: return "IrrationalCompletedSquare";
    case ErrorKind::NoPositiveRoot: return "NoPositiveRoot";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoClosedForm: return "NoClosedForm";
    case ErrorKind::ContractViolation: return "ContractViolation";
    case ErrorKind::UnknownIdentifier: return "UnknownIdentifier";
  }
  return "Unknown";
}

}  // namespace susa

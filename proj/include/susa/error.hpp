#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace susa {

enum class ErrorKind {
  MalformedDigit,
  MalformedNumeral,
  NotFinite,
  NonRegular,
  DivisionByZero,
  ZeroInput,
  NegativeRadicand,
  MissingConstant,
  PerfectSquare,
  NonPositive,
  NegativeDiscriminant,
  IrrationalCompletedSquare,
  NoPositiveRoot,
  OutOfRange,
  NoClosedForm,
  ContractViolation,
  UnknownIdentifier,
};

std::string_view error_kind_name(ErrorKind kind);

/// Domain error raised by every library operation. The kind is stable and
/// is what the CLI and the Python bindings surface to callers.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace susa

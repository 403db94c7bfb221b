#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtangle {

enum class ErrorKind {
  InvalidInput,
  Parse,
  NotPalindromic,
  NotZExpressible,
  PoleAtZero,
  HalfIntegerExponent,
  NotATree,
  BoundExceeded,
  NonIntegerCharPoly,
  BudgetExceeded,
  UnsupportedRealization,
  DenominatorVanishes,
  VerificationFailed,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotPalindromic: return "NotPalindromic";
    case ErrorKind::NotZExpressible: return "NotZExpressible";
    case ErrorKind::PoleAtZero: return "PoleAtZero";
    case ErrorKind::HalfIntegerExponent: return "HalfIntegerExponent";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonIntegerCharPoly: return "NonIntegerCharPoly";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UnsupportedRealization: return "UnsupportedRealization";
    case ErrorKind::DenominatorVanishes: return "DenominatorVanishes";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace qtangle

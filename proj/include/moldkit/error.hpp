#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moldkit {

enum class ErrorCode {
  ZeroInverse,
  FieldMismatch,
  InvalidPrime,
  CharTwo,
  CharNotTwo,
  ScalarInput,
  SingularP,
  NonInvertibleGenerator,
  InvalidWord,
  VanishingM,
  NotSemiSimple,
  NoSplitGenerator,
  NotUnipotent,
  NotUnipotentF2,
  NotScalar,
  NotInMold,
  ChartOverlapEmpty,
  BudgetExceeded,
  ParseError,
  ValidationError,
  Inconsistent,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidPrime: return "InvalidPrime";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::CharNotTwo: return "CharNotTwo";
    case ErrorCode::ScalarInput: return "ScalarInput";
    case ErrorCode::SingularP: return "SingularP";
    case ErrorCode::NonInvertibleGenerator: return "NonInvertibleGenerator";
    case ErrorCode::InvalidWord: return "InvalidWord";
    case ErrorCode::VanishingM: return "VanishingM";
    case ErrorCode::NotSemiSimple: return "NotSemiSimple";
    case ErrorCode::NoSplitGenerator: return "NoSplitGenerator";
    case ErrorCode::NotUnipotent: return "NotUnipotent";
    case ErrorCode::NotUnipotentF2: return "NotUnipotentF2";
    case ErrorCode::NotScalar: return "NotScalar";
    case ErrorCode::NotInMold: return "NotInMold";
    case ErrorCode::ChartOverlapEmpty: return "ChartOverlapEmpty";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::Inconsistent: return "Inconsistent";
  }
  return "Unknown";
}

/// Domain error carrying a machine-readable code. The CLI maps every
/// instance to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace moldkit

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpt {

enum class ErrorCode {
  GammaOutOfRange,
  LambdaNonPositive,
  LatticeTooSmall,
  LatticeTooLarge,
  InvalidArgument,
  DiagonalizationFailure,
  NonHermitianResult,
  TranslationInvarianceViolation,
  InsufficientPoints,
  QuadratureNonConvergence,
  StepCrossesCriticalPoint,
  PrecisionLoss,
  WindowViolation,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::GammaOutOfRange: return "GammaOutOfRange";
    case ErrorCode::LambdaNonPositive: return "LambdaNonPositive";
    case ErrorCode::LatticeTooSmall: return "LatticeTooSmall";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DiagonalizationFailure: return "DiagonalizationFailure";
    case ErrorCode::NonHermitianResult: return "NonHermitianResult";
    case ErrorCode::TranslationInvarianceViolation: return "TranslationInvarianceViolation";
    case ErrorCode::InsufficientPoints: return "InsufficientPoints";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::StepCrossesCriticalPoint: return "StepCrossesCriticalPoint";
    case ErrorCode::PrecisionLoss: return "PrecisionLoss";
    case ErrorCode::WindowViolation: return "WindowViolation";
  }
  return "Unknown";
}

// Parameter/lattice problems the caller can fix by changing input.
constexpr bool is_validation_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::GammaOutOfRange:
    case ErrorCode::LambdaNonPositive:
    case ErrorCode::LatticeTooSmall:
    case ErrorCode::LatticeTooLarge:
    case ErrorCode::InvalidArgument:
      return true;
    default:
      return false;
  }
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace qpt

#pragma once

#include <stdexcept>
#include <string>

namespace miqf {

enum class ErrorCode {
  DivisionByZero,
  MixedDelta,
  NotHermitian,
  WrongSignature,
  NotNormalizable,
  NotSimilitude,
  NonPositiveMultiplier,
  SingularDenominator,
  LeftDomain,
  NotInDomain,
  BadShape,
  InconsistentOmega,
  NotNormalized,
  BadK,
  WrongSignatureN,
  SingularLeadingBlock,
  RiemannCheckFailed,
  NonFinite,
  ParseError,
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::MixedDelta: return "MixedDelta";
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::WrongSignature: return "WrongSignature";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::NotSimilitude: return "NotSimilitude";
    case ErrorCode::NonPositiveMultiplier: return "NonPositiveMultiplier";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::LeftDomain: return "LeftDomain";
    case ErrorCode::NotInDomain: return "NotInDomain";
    case ErrorCode::BadShape: return "BadShape";
    case ErrorCode::InconsistentOmega: return "InconsistentOmega";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::BadK: return "BadK";
    case ErrorCode::WrongSignatureN: return "WrongSignatureN";
    case ErrorCode::SingularLeadingBlock: return "SingularLeadingBlock";
    case ErrorCode::RiemannCheckFailed: return "RiemannCheckFailed";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

/// Domain error carrying a stable machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + msg), code_(code) {}

  ErrorCode code() const { return code_; }

  /// Structural problems (malformed input, wrong dimensions) as opposed to
  /// mathematical validation failures. The CLI maps these to exit 2.
  bool is_shape_error() const {
    switch (code_) {
      case ErrorCode::MixedDelta:
      case ErrorCode::BadShape:
      case ErrorCode::BadK:
      case ErrorCode::NonFinite:
      case ErrorCode::ParseError:
        return true;
      default:
        return false;
    }
  }

 private:
  ErrorCode code_;
};

}  // namespace miqf

#include "texpic/error.hpp"

namespace texpic {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyScene: return "EmptyScene";
    case ErrorCode::InvalidPrimitive: return "InvalidPrimitive";
    case ErrorCode::ZeroDirection: return "ZeroDirection";
    case ErrorCode::Domain: return "Domain";
    case ErrorCode::InconsistentSlope: return "InconsistentSlope";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::LintFailed: return "LintFailed";
    case ErrorCode::MalformedInput: return "MalformedInput";
    case ErrorCode::UnsupportedFeature: return "UnsupportedFeature";
    case ErrorCode::EmptyGeometry: return "EmptyGeometry";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

}  // namespace texpic

#include "exstructa/error.hpp"

namespace exstructa {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::KupischViolation: return "KupischViolation";
    case ErrorCode::WindingUnsupported: return "WindingUnsupported";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::ProjectiveHasNoTau: return "ProjectiveHasNoTau";
    case ErrorCode::NotAnExtension: return "NotAnExtension";
    case ErrorCode::TooManyStructures: return "TooManyStructures";
    case ErrorCode::DimensionBound: return "DimensionBound";
    case ErrorCode::DecompositionFailed: return "DecompositionFailed";
    case ErrorCode::UnrecognizedModule: return "UnrecognizedModule";
    case ErrorCode::NotMonic: return "NotMonic";
    case ErrorCode::ExtNotMultiplicityFree: return "ExtNotMultiplicityFree";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NotJordanHolder: return "NotJordanHolder";
    case ErrorCode::InvalidFixture: return "InvalidFixture";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace exstructa

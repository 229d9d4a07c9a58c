#include "dsign/error.hpp"

namespace dsign {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::DegenerateSign: return "DegenerateSign";
    case ErrorKind::SingularInput: return "SingularInput";
    case ErrorKind::SingularOperator: return "SingularOperator";
    case ErrorKind::DimensionOne: return "DimensionOne";
    case ErrorKind::SignInconsistent: return "SignInconsistent";
    case ErrorKind::ModeMismatch: return "ModeMismatch";
    case ErrorKind::ZeroMap: return "ZeroMap";
    case ErrorKind::BadSplit: return "BadSplit";
    case ErrorKind::CenterTooLarge: return "CenterTooLarge";
    case ErrorKind::DegenerateCenter: return "DegenerateCenter";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NoHyperplane: return "NoHyperplane";
    case ErrorKind::NotEQuadratic: return "NotEQuadratic";
    case ErrorKind::NonUniqueIdempotent: return "NonUniqueIdempotent";
    case ErrorKind::BadDimension: return "BadDimension";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::NotDivision: return "NotDivision";
    case ErrorKind::NoImaginaryUnit: return "NoImaginaryUnit";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::ZeroQuaternion: return "ZeroQuaternion";
    case ErrorKind::NotSpecialOrthogonal: return "NotSpecialOrthogonal";
    case ErrorKind::FactorizationFailed: return "FactorizationFailed";
    case ErrorKind::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

bool is_numerical(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateSign:
    case ErrorKind::NonConvergence:
    case ErrorKind::FactorizationFailed:
    case ErrorKind::VerificationFailed:
      return true;
    default:
      return false;
  }
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace dsign

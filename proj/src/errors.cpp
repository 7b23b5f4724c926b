#include "parind/errors.hpp"

namespace parind {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCartan: return "InvalidCartan";
    case ErrorCode::NonFiniteType: return "NonFiniteType";
    case ErrorCode::UnknownRoot: return "UnknownRoot";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::GroupTooLarge: return "GroupTooLarge";
    case ErrorCode::InvalidNesting: return "InvalidNesting";
    case ErrorCode::MixedAmbient: return "MixedAmbient";
    case ErrorCode::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorCode::NotEMinimal: return "NotEMinimal";
    case ErrorCode::QOutOfRange: return "QOutOfRange";
    case ErrorCode::InvalidM1Triple: return "InvalidM1Triple";
    case ErrorCode::NotSupercuspidal: return "NotSupercuspidal";
    case ErrorCode::LatticeTooLarge: return "LatticeTooLarge";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidCartan:
    case ErrorCode::NonFiniteType:
    case ErrorCode::UnknownLabel:
    case ErrorCode::InvalidDescriptor:
      return ErrorCategory::Validation;
    case ErrorCode::GroupTooLarge:
    case ErrorCode::LatticeTooLarge:
      return ErrorCategory::Resource;
    default:
      return ErrorCategory::Semantic;
  }
}

}  // namespace parind

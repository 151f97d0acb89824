#include "gaborlat/error.hpp"

namespace gaborlat {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ExactBackendRequired: return "ExactBackendRequired";
    case ErrorCode::GridMismatch: return "GridMismatch";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::SingularBasis: return "SingularBasis";
    case ErrorCode::NotInField: return "NotInField";
    case ErrorCode::NotDensityOne: return "NotDensityOne";
    case ErrorCode::NotDiscrete: return "NotDiscrete";
    case ErrorCode::NotLowerTriangular: return "NotLowerTriangular";
    case ErrorCode::UnboundedSet: return "UnboundedSet";
    case ErrorCode::InsufficientMargin: return "InsufficientMargin";
    case ErrorCode::NotPiecewiseConstant: return "NotPiecewiseConstant";
    case ErrorCode::ZeroMu: return "ZeroMu";
    case ErrorCode::GridTooCoarse: return "GridTooCoarse";
    case ErrorCode::GridIncompatible: return "GridIncompatible";
    case ErrorCode::OrderTooLarge: return "OrderTooLarge";
    case ErrorCode::AngleIllConditioned: return "AngleIllConditioned";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::RadiusExceedsWindow: return "RadiusExceedsWindow";
    case ErrorCode::DegenerateAngle: return "DegenerateAngle";
    case ErrorCode::MultipleSymbols: return "MultipleSymbols";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::InvalidArgument:
    case ErrorCode::ExactBackendRequired:
    case ErrorCode::GridMismatch:
    case ErrorCode::EmptyInput:
    case ErrorCode::MultipleSymbols:
      return true;
    default:
      return false;
  }
}

}  // namespace gaborlat

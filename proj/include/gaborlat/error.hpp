#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gaborlat {

enum class ErrorCode {
  // input / schema problems
  ParseError,
  InvalidArgument,
  ExactBackendRequired,
  GridMismatch,
  EmptyInput,
  // numeric preconditions
  SingularBasis,
  NotInField,
  NotDensityOne,
  NotDiscrete,
  NotLowerTriangular,
  UnboundedSet,
  InsufficientMargin,
  NotPiecewiseConstant,
  ZeroMu,
  GridTooCoarse,
  GridIncompatible,
  OrderTooLarge,
  AngleIllConditioned,
  NotUnimodular,
  RadiusExceedsWindow,
  DegenerateAngle,
  MultipleSymbols,
};

std::string_view to_string(ErrorCode code);

/// True for codes that describe malformed input rather than a violated
/// numeric precondition. The CLI maps these to exit code 2, the rest to 3.
bool is_input_error(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gaborlat

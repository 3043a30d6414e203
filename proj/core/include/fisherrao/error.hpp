#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fisherrao {

enum class ErrorCode {
  NotPositiveDefinite,
  NotSymmetric,
  ConvergenceFailure,
  ZeroVector,
  DimensionMismatch,
  InvalidExpectationParam,
  SingularFactor,
  InvalidCrossRatio,
  ProjectionOutsideModel,
  NegativeInput,
  MeanMismatch,
  CovarianceMismatch,
  EmptyInput,
  KTooLarge,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fisherrao

#pragma once

#include <stdexcept>
#include <string>

namespace eicp {

// Values mirror eicp_status in eicp.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  NotSymmetric = 2,
  DimensionMismatch = 3,
  NotPositiveDefinite = 4,
  NonConvergence = 5,
  HypothesisViolation = 6,
  NegativeDiscriminant = 7,
  DimensionTooLarge = 8,
  ParamOutOfRange = 9,
  NoRealRoot = 10,
  NotCommuting = 11,
  NegativeShift = 12,
  ParseError = 13,
  InternalError = 14,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace eicp

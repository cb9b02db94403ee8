#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cwlab {

enum class ErrorCode {
  kInvalidArgument,
  kDimensionMismatch,
  kInvalidLieType,
  kAmbientConstraint,
  kZeroRoot,
  kNotSymmetric,
  kNotSpd,
  kNonConvex,
  kShiftInvalid,
  kDegenerateDirection,
  kLogBranch,
  kNoConvergence,
  kNotApplicable,
  kE6Unsupported,
  kParse,
};

std::string_view error_code_name(ErrorCode code);

/// Exception carrying one of the stable error codes listed above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cwlab

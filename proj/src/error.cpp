#include "cwlab/error.hpp"

namespace cwlab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDimensionMismatch: return "DIMENSION_MISMATCH";
    case ErrorCode::kInvalidLieType: return "INVALID_LIE_TYPE";
    case ErrorCode::kAmbientConstraint: return "AMBIENT_CONSTRAINT";
    case ErrorCode::kZeroRoot: return "ZERO_ROOT";
    case ErrorCode::kNotSymmetric: return "NOT_SYMMETRIC";
    case ErrorCode::kNotSpd: return "NOT_SPD";
    case ErrorCode::kNonConvex: return "NON_CONVEX";
    case ErrorCode::kShiftInvalid: return "SHIFT_INVALID";
    case ErrorCode::kDegenerateDirection: return "DEGENERATE_DIRECTION";
    case ErrorCode::kLogBranch: return "LOG_BRANCH";
    case ErrorCode::kNoConvergence: return "NO_CONVERGENCE";
    case ErrorCode::kNotApplicable: return "NOT_APPLICABLE";
    case ErrorCode::kE6Unsupported: return "E6_UNSUPPORTED";
    case ErrorCode::kParse: return "PARSE";
  }
  return "UNKNOWN";
}

}  // namespace cwlab

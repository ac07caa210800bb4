#include "szq/error.hpp"

namespace szq {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidCoefficients: return "invalid-coefficients";
    case ErrorCode::InvalidDegree: return "invalid-degree";
    case ErrorCode::ZerosNotInDisk: return "zeros-not-in-disk";
    case ErrorCode::NotPositiveDefinite: return "not-positive-definite";
    case ErrorCode::InsufficientResolution: return "insufficient-resolution";
    case ErrorCode::InsufficientMoments: return "insufficient-moments";
    case ErrorCode::InvalidMeasure: return "invalid-measure";
    case ErrorCode::UnsupportedVariant: return "unsupported-variant";
    case ErrorCode::ArityMismatch: return "arity-mismatch";
    case ErrorCode::InternalConsistency: return "internal-consistency";
    case ErrorCode::NodeCount: return "node-count";
    case ErrorCode::PositivityViolation: return "positivity-violation";
    case ErrorCode::DegenerateSpec: return "degenerate-spec";
    case ErrorCode::LogSingularity: return "log-singularity";
    case ErrorCode::SymmetryViolation: return "symmetry-violation";
    case ErrorCode::Parse: return "parse-error";
  }
  return "unknown";
}

}  // namespace szq

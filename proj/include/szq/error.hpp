#pragma once

#include <stdexcept>
#include <string>

namespace szq {

enum class ErrorCode {
  InvalidArgument,
  InvalidCoefficients,
  InvalidDegree,
  ZerosNotInDisk,
  NotPositiveDefinite,
  InsufficientResolution,
  InsufficientMoments,
  InvalidMeasure,
  UnsupportedVariant,
  ArityMismatch,
  InternalConsistency,
  NodeCount,
  PositivityViolation,
  DegenerateSpec,
  LogSingularity,
  SymmetryViolation,
  Parse,
};

[[nodiscard]] const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above, so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace szq

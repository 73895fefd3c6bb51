#pragma once

#include <stdexcept>
#include <string>

namespace gabc {

enum class ErrorCode {
  NonConvergence,
  BoundaryZero,
  OutsideDisk,
  IndeterminateBoundaryZero,
  PoleProximity,
  AmbiguousCluster,
  NoConvergence,
  LogSingularity,
  HypothesisViolated,
  Divergence,
  PsiAxiomViolation,
  NonRegularMajorant,
  DivisibilityFailure,
  DegenerateInput,
  SumMismatch,
  BoundaryRoot,
  EpsTooLarge,
  InvalidArgument,
  ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gabc

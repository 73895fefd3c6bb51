#include "garsia_abc/error.hpp"

namespace gabc {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::BoundaryZero: return "BoundaryZero";
    case ErrorCode::OutsideDisk: return "OutsideDisk";
    case ErrorCode::IndeterminateBoundaryZero: return "IndeterminateBoundaryZero";
    case ErrorCode::PoleProximity: return "PoleProximity";
    case ErrorCode::AmbiguousCluster: return "AmbiguousCluster";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::LogSingularity: return "LogSingularity";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::Divergence: return "Divergence";
    case ErrorCode::PsiAxiomViolation: return "PsiAxiomViolation";
    case ErrorCode::NonRegularMajorant: return "NonRegularMajorant";
    case ErrorCode::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::SumMismatch: return "SumMismatch";
    case ErrorCode::BoundaryRoot: return "BoundaryRoot";
    case ErrorCode::EpsTooLarge: return "EpsTooLarge";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace gabc

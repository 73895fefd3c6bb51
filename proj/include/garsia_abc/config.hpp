#pragma once

#include <cstddef>
#include <cstdint>

#include "garsia_abc/blaschke.hpp"
#include "garsia_abc/boundary.hpp"
#include "garsia_abc/norms.hpp"

namespace gabc {

/// Every numeric policy knob of a run. Defaults reproduce the documented
/// behaviour; the CLI reads overrides from a JSON config file.
struct RunConfig {
  double boundary_margin = kDefaultBoundaryMargin;
  double cluster_tolerance = kDefaultClusterTolerance;
  double match_tolerance = kDefaultMatchTolerance;
  double quadrature_agreement = 1e-9;
  std::size_t node_cap = std::size_t{1} << 16;
  double zero_free_threshold = kDefaultZeroFreeThreshold;
  /// Tolerance of the multiplicity certificate behind W calB^n / bigB.
  double multiplicity_tolerance = 1e-6;
  /// Base slack allowed in the Theorem C comparison.
  double theorem_c_tolerance = 1e-6;
  /// Conservative cap on the realized Lipschitz-proposition ratios.
  double ratio_cap = 4.0;
  DiskSupremumOptions disk;
  std::uint64_t seed = 20101;

  QuadratureOptions quadrature() const { return {quadrature_agreement, node_cap}; }

  /// Throws InvalidArgument unless every tolerance is positive.
  void validate() const;
};

}  // namespace gabc

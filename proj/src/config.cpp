#include "garsia_abc/config.hpp"

#include "garsia_abc/error.hpp"

namespace gabc {

void RunConfig::validate() const {
  const double positives[] = {boundary_margin,       cluster_tolerance,      match_tolerance,
                              quadrature_agreement,  zero_free_threshold,    multiplicity_tolerance,
                              theorem_c_tolerance,   ratio_cap};
  for (double v : positives)
    if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, "all tolerances must be positive");
  if (node_cap < 64) throw Error(ErrorCode::InvalidArgument, "node cap must be at least 64");
  if (disk.levels < 3 || disk.base_angular < 4 || disk.angular_cap < disk.base_angular)
    throw Error(ErrorCode::InvalidArgument, "disk supremum grid is too coarse");
}

}  // namespace gabc

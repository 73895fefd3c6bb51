#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <vector>

#include "garsia_abc/poly.hpp"

namespace gabc {

enum class Smoothness { analytic, lipschitz, rough };

/// A real-valued function on the circle, parametrized by angle.
struct BoundaryFunction {
  std::function<double(double)> sampler;
  Smoothness smoothness_hint = Smoothness::analytic;

  double operator()(double theta) const { return sampler(theta); }
};

/// Uniform trapezoid nodes theta_m = 2 pi (m + offset) / node_count.
struct QuadratureGrid {
  std::size_t node_count = 256;
  /// Fraction of a node spacing; 0.5 gives the half-shifted grid.
  double offset = 0.0;

  double node(std::size_t m, std::size_t count) const;
};

struct QuadratureOptions {
  double agreement = 1e-9;
  std::size_t node_cap = std::size_t{1} << 16;
};

struct QuadratureResult {
  double value = 0.0;
  /// |S_{2M} - S_M| at acceptance.
  double error = 0.0;
  std::size_t nodes = 0;
};

/// Normalized circle average (1/2pi) int g, by doubling the trapezoid rule
/// until two consecutive levels agree. Throws NoConvergence at node_cap.
QuadratureResult circle_mean(const BoundaryFunction& g, const QuadratureGrid& grid = {},
                             const QuadratureOptions& options = {});

inline constexpr double kPoissonRadiusLimit = 1.0 - 1e-5;

/// Poisson extension of g at an interior point, by the trapezoid rule with
/// a starting node count scaled to the kernel width 1 - |z|.
QuadratureResult poisson_integral(const BoundaryFunction& g, cplx z, const QuadratureGrid& grid = {},
                                  const QuadratureOptions& options = {});

inline constexpr double kLogFloor = 1e-300;

/// |O_g(z)| = exp(P[log g](z)). Throws LogSingularity when g <= kLogFloor at
/// a node.
double outer_modulus(const BoundaryFunction& g, cplx z, const QuadratureGrid& grid = {},
                     const QuadratureOptions& options = {});

/// Extremum of a boundary function: grid scan followed by golden-section
/// refinement around the best node.
struct BoundaryExtremum {
  double value = 0.0;
  double theta = 0.0;
  /// Change produced by the local refinement.
  double refinement_error = 0.0;
};

inline constexpr std::size_t kDefaultBoundaryNodes = 1024;

BoundaryExtremum sup_norm_boundary(const BoundaryFunction& g, std::size_t nodes = kDefaultBoundaryNodes);
BoundaryExtremum inf_boundary(const BoundaryFunction& g, std::size_t nodes = kDefaultBoundaryNodes);

struct ZeroFreeMargin {
  /// min over roots of ||root| - 1|; +infinity for constants.
  double root_margin = std::numeric_limits<double>::infinity();
  /// min over the circle of |p|.
  double boundary_min = 0.0;
};

ZeroFreeMargin zero_free_margin(const ComplexPolynomial& p);

inline constexpr double kDefaultZeroFreeThreshold = 1e-4;

/// ||1/p||_inf on the circle. Throws HypothesisViolated when the root
/// margin is not above threshold or p vanishes on the circle.
double inv_sup_norm(const ComplexPolynomial& p, double threshold = kDefaultZeroFreeThreshold);

/// Poisson extension through the Fourier series of g:
///   P g(z) = c_0 + 2 Re sum_{k>=1} c_k z^k.
/// Coefficients come from an FFT of g on a doubling grid, truncated once the
/// upper half of the spectrum falls below the relative tolerance. This is the
/// engine used for Poisson data inside the norm evaluators; it is accurate up
/// to the circle, unlike the direct trapezoid rule.
class HarmonicExtension {
 public:
  struct Options {
    double tolerance = 1e-15;
    std::size_t min_nodes = 64;
    std::size_t node_cap = std::size_t{1} << 16;
  };

  HarmonicExtension() = default;
  HarmonicExtension(const BoundaryFunction& g, const Options& options);
  explicit HarmonicExtension(const BoundaryFunction& g) : HarmonicExtension(g, Options{}) {}

  double operator()(cplx z) const noexcept;
  double mean() const noexcept { return coeffs_.empty() ? 0.0 : coeffs_[0].real(); }
  std::size_t harmonics() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// Bound on the discarded tail (sum of dropped coefficient moduli).
  double truncation_error() const noexcept { return truncation_error_; }
  bool converged() const noexcept { return converged_; }

 private:
  std::vector<cplx> coeffs_;  // c_0 .. c_K
  double truncation_error_ = 0.0;
  bool converged_ = true;
};

}  // namespace gabc

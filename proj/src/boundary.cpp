#include "garsia_abc/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "garsia_abc/error.hpp"

namespace gabc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::size_t next_pow2(double x) {
  std::size_t n = 1;
  while (static_cast<double>(n) < x) n <<= 1;
  return n;
}

// Trapezoid sums on nested grids: level 2M reuses the M samples.
template <class Sample>
QuadratureResult doubling_trapezoid(Sample&& sample, std::size_t start_nodes, double shift,
                                    const QuadratureOptions& options) {
  std::size_t m = start_nodes;
  if (m > options.node_cap) throw Error(ErrorCode::NoConvergence, "required nodes exceed the node cap");
  double sum = 0.0, abs_sum = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double v = sample(shift + kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    sum += v;
    abs_sum += std::abs(v);
  }
  double current = sum / static_cast<double>(m);
  while (2 * m <= options.node_cap) {
    double odd = 0.0, odd_abs = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double v = sample(shift + kTwoPi * (static_cast<double>(k) + 0.5) / static_cast<double>(m));
      odd += v;
      odd_abs += std::abs(v);
    }
    sum += odd;
    abs_sum += odd_abs;
    m *= 2;
    const double refined = sum / static_cast<double>(m);
    const double scale = abs_sum / static_cast<double>(m);
    const double delta = std::abs(refined - current);
    if (delta <= options.agreement * scale || scale == 0.0) return {refined, delta, m};
    current = refined;
  }
  throw Error(ErrorCode::NoConvergence, "trapezoid doubling did not agree by " + std::to_string(options.node_cap) +
                                            " nodes");
}

double golden_section(const std::function<double(double)>& f, double lo, double hi, bool maximize) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  const double sign = maximize ? 1.0 : -1.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a), d = a + inv_phi * (b - a);
  double fc = sign * f(c), fd = sign * f(d);
  while (b - a > 1e-12) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = sign * f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = sign * f(d);
    }
  }
  return 0.5 * (a + b);
}

BoundaryExtremum extremum(const BoundaryFunction& g, std::size_t nodes, bool maximize) {
  if (nodes < 3) throw Error(ErrorCode::InvalidArgument, "boundary extremum needs at least 3 nodes");
  const double h = kTwoPi / static_cast<double>(nodes);
  std::size_t best = 0;
  double best_value = g(0.0);
  for (std::size_t k = 1; k < nodes; ++k) {
    const double v = g(h * static_cast<double>(k));
    if (maximize ? v > best_value : v < best_value) {
      best = k;
      best_value = v;
    }
  }
  const double center = h * static_cast<double>(best);
  const double theta = golden_section(g.sampler, center - h, center + h, maximize);
  const double refined = g(theta);
  BoundaryExtremum out{best_value, center, 0.0};
  if (maximize ? refined > best_value : refined < best_value) {
    out.value = refined;
    out.theta = std::fmod(theta + kTwoPi, kTwoPi);
    out.refinement_error = std::abs(refined - best_value);
  }
  return out;
}

}  // namespace

double QuadratureGrid::node(std::size_t m, std::size_t count) const {
  const double shift = kTwoPi * offset / static_cast<double>(node_count);
  return shift + kTwoPi * static_cast<double>(m) / static_cast<double>(count);
}

QuadratureResult circle_mean(const BoundaryFunction& g, const QuadratureGrid& grid, const QuadratureOptions& options) {
  const std::size_t start = next_pow2(std::max<double>(64.0, static_cast<double>(grid.node_count)));
  return doubling_trapezoid(g.sampler, start, grid.node(0, grid.node_count), options);
}

QuadratureResult poisson_integral(const BoundaryFunction& g, cplx z, const QuadratureGrid& grid,
                                  const QuadratureOptions& options) {
  const double r = std::abs(z);
  if (!(r < 1.0)) throw Error(ErrorCode::InvalidArgument, "Poisson integral requires |z| < 1");
  if (r > kPoissonRadiusLimit)
    throw Error(ErrorCode::NoConvergence, "Poisson kernel too peaked near the circle; use boundary values");
  const double width = 1.0 - r;
  const std::size_t start =
      next_pow2(std::max({64.0, static_cast<double>(grid.node_count), 4.0 / width}));
  const double kernel_numerator = 1.0 - r * r;
  auto integrand = [&](double theta) {
    return g(theta) * kernel_numerator / std::norm(std::polar(1.0, theta) - z);
  };
  return doubling_trapezoid(integrand, start, grid.node(0, grid.node_count), options);
}

double outer_modulus(const BoundaryFunction& g, cplx z, const QuadratureGrid& grid, const QuadratureOptions& options) {
  BoundaryFunction log_g{[&](double theta) {
                           const double v = g(theta);
                           if (!(v > kLogFloor))
                             throw Error(ErrorCode::LogSingularity,
                                         "boundary modulus vanishes at theta = " + std::to_string(theta));
                           return std::log(v);
                         },
                         g.smoothness_hint};
  return std::exp(poisson_integral(log_g, z, grid, options).value);
}

BoundaryExtremum sup_norm_boundary(const BoundaryFunction& g, std::size_t nodes) { return extremum(g, nodes, true); }

BoundaryExtremum inf_boundary(const BoundaryFunction& g, std::size_t nodes) { return extremum(g, nodes, false); }

ZeroFreeMargin zero_free_margin(const ComplexPolynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero-free margin of the zero polynomial");
  ZeroFreeMargin out;
  if (p.degree() >= 1)
    for (const auto& root : find_roots(p).roots)
      out.root_margin = std::min(out.root_margin, std::abs(std::abs(root.location) - 1.0));
  out.boundary_min = inf_boundary({[&](double t) { return std::abs(p(std::polar(1.0, t))); }}).value;
  return out;
}

double inv_sup_norm(const ComplexPolynomial& p, double threshold) {
  const auto margin = zero_free_margin(p);
  if (!(margin.root_margin > threshold) || !(margin.boundary_min > 0.0))
    throw Error(ErrorCode::HypothesisViolated,
                "polynomial is not zero-free on the circle (root margin " + std::to_string(margin.root_margin) + ")");
  return 1.0 / margin.boundary_min;
}

HarmonicExtension::HarmonicExtension(const BoundaryFunction& g, const Options& options) {
  std::size_t m = next_pow2(static_cast<double>(std::max<std::size_t>(options.min_nodes, 8)));
  while (true) {
    std::vector<cplx> samples(m);
    for (std::size_t k = 0; k < m; ++k) samples[k] = g(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    const auto spectrum = detail::dft_forward(samples);
    const std::size_t half = m / 2;
    std::vector<cplx> c(half);
    double scale = 0.0;
    for (std::size_t k = 0; k < half; ++k) {
      c[k] = spectrum[k] / static_cast<double>(m);
      scale = std::max(scale, std::abs(c[k]));
    }
    double tail = 0.0;
    for (std::size_t k = half / 2; k < half; ++k) tail = std::max(tail, std::abs(c[k]));
    const bool settled = tail <= options.tolerance * scale || scale == 0.0;
    if (settled || 2 * m > options.node_cap) {
      converged_ = settled;
      std::size_t keep = half;
      const double cutoff = 0.01 * options.tolerance * scale;
      while (keep > 1 && std::abs(c[keep - 1]) <= cutoff) --keep;
      double dropped = 0.0;
      for (std::size_t k = keep; k < half; ++k) dropped += std::abs(c[k]);
      c.resize(keep);
      c[0] = c[0].real();
      coeffs_ = std::move(c);
      // Dropped terms plus an aliasing allowance from the spectral tail.
      truncation_error_ = 2.0 * dropped + static_cast<double>(half) * tail;
      return;
    }
    m *= 2;
  }
}

double HarmonicExtension::operator()(cplx z) const noexcept {
  if (coeffs_.empty()) return 0.0;
  cplx acc{};
  for (std::size_t k = coeffs_.size() - 1; k >= 1; --k) acc = acc * z + coeffs_[k];
  return coeffs_[0].real() + 2.0 * (acc * z).real();
}

}  // namespace gabc

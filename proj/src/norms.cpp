#include "garsia_abc/norms.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "garsia_abc/error.hpp"

namespace gabc {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

// ---------------------------------------------------------------- majorants

Majorant Majorant::power(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw Error(ErrorCode::InvalidArgument, "power majorant needs 0 < alpha <= 1");
  Majorant m;
  m.kind_ = Kind::power;
  m.alpha_ = alpha;
  return m;
}

Majorant Majorant::power_log(double alpha, double epsilon) {
  if (!(alpha >= 0.0 && alpha < 1.0) || !(epsilon > 0.0 && epsilon <= 1.0 - alpha))
    throw Error(ErrorCode::InvalidArgument, "power-log majorant needs 0 <= alpha < 1, 0 < epsilon <= 1 - alpha");
  Majorant m;
  m.kind_ = Kind::power_log;
  m.alpha_ = alpha;
  m.epsilon_ = epsilon;
  return m;
}

Majorant Majorant::tabulated(std::vector<double> t, std::vector<double> omega) {
  if (t.size() != omega.size() || t.size() < 2)
    throw Error(ErrorCode::InvalidArgument, "tabulated majorant needs at least two (t, omega) pairs");
  Majorant m;
  m.kind_ = Kind::tabulated;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!(t[i] > 0.0) || !(omega[i] > 0.0))
      throw Error(ErrorCode::InvalidArgument, "tabulated majorant values must be positive");
    if (i > 0 && !(t[i] > t[i - 1])) throw Error(ErrorCode::InvalidArgument, "tabulated t must increase");
    m.log_t_.push_back(std::log(t[i]));
    m.log_omega_.push_back(std::log(omega[i]));
  }
  m.validate();
  return m;
}

double Majorant::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  switch (kind_) {
    case Kind::power:
      return std::pow(t, alpha_);
    case Kind::power_log:
      return std::pow(t, alpha_) * std::pow(std::log(std::numbers::e + 1.0 / t), -epsilon_);
    case Kind::tabulated: {
      const double x = std::log(t);
      const std::size_t n = log_t_.size();
      std::size_t i = 0;
      if (x <= log_t_.front())
        i = 0;
      else if (x >= log_t_.back())
        i = n - 2;
      else
        i = static_cast<std::size_t>(std::upper_bound(log_t_.begin(), log_t_.end(), x) - log_t_.begin()) - 1;
      const double slope = (log_omega_[i + 1] - log_omega_[i]) / (log_t_[i + 1] - log_t_[i]);
      return std::exp(log_omega_[i] + slope * (x - log_t_[i]));
    }
  }
  return 0.0;
}

std::string Majorant::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::power: os << "t^" << alpha_; break;
    case Kind::power_log: os << "t^" << alpha_ << "*log(e+1/t)^-" << epsilon_; break;
    case Kind::tabulated: os << "tabulated(" << log_t_.size() << ")"; break;
  }
  return os.str();
}

void Majorant::validate() const {
  constexpr int samples = 400;
  double prev_t = 0.0, prev_w = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double t = std::pow(10.0, -12.0 + 12.6 * i / samples);
    const double w = (*this)(t);
    if (!std::isfinite(w) || !(w > 0.0)) throw Error(ErrorCode::InvalidArgument, "majorant must be positive");
    if (i > 0) {
      if (w < prev_w * (1.0 - 1e-12)) throw Error(ErrorCode::InvalidArgument, "majorant must be increasing");
      if (w / t > (prev_w / prev_t) * (1.0 + 1e-12))
        throw Error(ErrorCode::InvalidArgument, "majorant omega(t)/t must be nonincreasing");
    }
    prev_t = t;
    prev_w = w;
  }
  if ((*this)(1e-12) > 1e-2) throw Error(ErrorCode::InvalidArgument, "majorant must tend to 0 at 0+");
}

namespace {

// Integrates chunk by chunk in log-variable s until a chunk contributes less
// than 1e-12 of the running total. direction -1 walks toward -infinity.
double settle_integral(const std::function<double(double)>& integrand, double start, int direction,
                       int max_chunks) {
  using boost::math::quadrature::gauss;
  double total = 0.0;
  for (int chunk = 0; chunk < max_chunks; ++chunk) {
    const double a = start + direction * chunk;
    const double b = a + direction;
    const double piece = std::abs(gauss<double, 15>::integrate(integrand, std::min(a, b), std::max(a, b)));
    if (!std::isfinite(piece)) break;
    total += piece;
    if (chunk > 0 && piece <= 1e-12 * total) return total;
  }
  throw Error(ErrorCode::Divergence, "majorant integral does not converge");
}

}  // namespace

double majorant_regularity_constant(const Majorant& omega) {
  constexpr int grid = 60;
  constexpr int max_chunks = 20000;
  double best = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double delta = std::pow(10.0, -8.0 + (8.0 + std::log10(1.999)) * i / (grid - 1));
    const double log_delta = std::log(delta);
    const double head = settle_integral([&](double s) { return omega(std::exp(s)); }, log_delta, -1, max_chunks);
    const double tail =
        settle_integral([&](double s) { return omega(std::exp(s)) * std::exp(-s); }, log_delta, +1, max_chunks);
    best = std::max(best, (head + delta * tail) / omega(delta));
  }
  return best;
}

// ---------------------------------------------------------------- GTN specs

GtnSpec GtnSpec::garsia() { return {2.0, PsiKind::poisson_square, WeightKind::one, Majorant::power(1.0)}; }

GtnSpec GtnSpec::garsia_omega(const Majorant& omega) {
  return {2.0, PsiKind::poisson_square, WeightKind::omega_gap, omega};
}

GtnSpec GtnSpec::m_omega(const Majorant& omega) { return {1.0, PsiKind::m_omega, WeightKind::omega_gap, omega}; }

GtnSpec GtnSpec::ntilde1() { return {1.0, PsiKind::ntilde1, WeightKind::gap, Majorant::power(1.0)}; }

double GtnSpec::weight_at(cplx z) const {
  const double gap = 1.0 - std::abs(z);
  switch (weight) {
    case WeightKind::one: return 1.0;
    case WeightKind::omega_gap: return omega(gap);
    case WeightKind::gap: return gap;
  }
  return 1.0;
}

std::string GtnSpec::describe() const {
  std::ostringstream os;
  os << "p=" << p << ",psi=";
  switch (psi) {
    case PsiKind::poisson_square: os << "poisson_square"; break;
    case PsiKind::m_omega: os << "m_omega"; break;
    case PsiKind::ntilde1: os << "ntilde1"; break;
  }
  os << ",k=";
  switch (weight) {
    case WeightKind::one: os << "one"; break;
    case WeightKind::omega_gap: os << "omega_gap"; break;
    case WeightKind::gap: os << "gap"; break;
  }
  if (psi == PsiKind::m_omega || weight == WeightKind::omega_gap) os << ",omega=" << omega.describe();
  return os.str();
}

// ---------------------------------------------------------------- functions

cplx DiskFunction::operator()(cplx z) const { return outer(z) * evaluate(inner, z); }

cplx DiskFunction::derivative_at(cplx z) const {
  return derivative(outer)(z) * evaluate(inner, z) + outer(z) * gabc::derivative_at(inner, z);
}

double DiskFunction::boundary_modulus(double theta) const { return std::abs(outer(std::polar(1.0, theta))); }

DiskFunction DiskFunction::scaled(double lambda) const { return {outer * cplx(lambda), inner}; }

// ---------------------------------------------------------------- suprema

DiskSupremumEstimate disk_supremum(const std::function<double(cplx)>& f, const DiskSupremumOptions& options) {
  const int levels = std::max(options.levels, 1);
  DiskSupremumEstimate best{f(0.0), 0.0, 0.0, true};
  int best_level = 0;
  double best_phi = 0.0;
  std::size_t best_count = 1;
  std::vector<double> level_max(static_cast<std::size_t>(levels) + 1, -std::numeric_limits<double>::infinity());
  level_max[0] = best.value;

  for (int i = 1; i <= levels; ++i) {
    const double r = 1.0 - std::ldexp(1.0, -i);
    const std::size_t count = std::min(options.base_angular << i, options.angular_cap);
    for (std::size_t k = 0; k < count; ++k) {
      const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(count);
      const double v = f(std::polar(r, phi));
      level_max[static_cast<std::size_t>(i)] = std::max(level_max[static_cast<std::size_t>(i)], v);
      if (v > best.value) {
        best.value = v;
        best.attained_at = std::polar(r, phi);
        best_level = i;
        best_phi = phi;
        best_count = count;
      }
    }
  }
  const double grid_best = best.value;

  // Compass search in (s, phi) with r = 1 - 2^{-s}, s in [0, levels].
  double s = best_level, phi = best_phi;
  double ds = 0.5, dphi = kTwoPi / static_cast<double>(std::max<std::size_t>(best_count, 16));
  auto at = [&](double ss, double pp) { return std::polar(1.0 - std::exp2(-ss), pp); };
  for (int iter = 0; iter < 400 && (ds > 1e-8 || dphi > 1e-10); ++iter) {
    const double cand[4][2] = {{s + ds, phi}, {s - ds, phi}, {s, phi + dphi}, {s, phi - dphi}};
    bool moved = false;
    for (const auto& c : cand) {
      if (c[0] < 0.0 || c[0] > levels) continue;
      const double v = f(at(c[0], c[1]));
      if (v > best.value) {
        best.value = v;
        best.attained_at = at(c[0], c[1]);
        s = c[0];
        phi = c[1];
        moved = true;
      }
    }
    if (!moved) {
      ds *= 0.5;
      dphi *= 0.5;
    }
  }
  best.refinement_error = best.value - grid_best;

  const auto last = static_cast<std::size_t>(levels);
  const bool still_rising = levels >= 3 && level_max[last] > level_max[last - 1] + 1e-14 * std::abs(level_max[last]);
  if (still_rising && s >= levels - 1e-6) {
    const double v1 = f(at(levels - 2, phi));
    const double v2 = f(at(levels - 1, phi));
    const double v3 = f(at(levels, phi));
    const double d1 = v2 - v1, d2 = v3 - v2;
    const double scale = std::max(std::abs(v3), 1e-300);
    if (std::abs(d2) <= 1e-13 * scale) {
      // Flat along the ray already.
    } else if (d1 > 0.0 && d2 > 0.0 && d1 / d2 > 1.6 && d1 / d2 < 2.6 && options.radial_extrapolation) {
      // Linear-in-gap approach to the boundary: second-order Richardson.
      const double r1 = 2.0 * v3 - v2;
      const double r1_prev = 2.0 * v2 - v1;
      const double r2 = (4.0 * r1 - r1_prev) / 3.0;
      if (r2 > best.value) {
        best.refinement_error += (r2 - best.value) + std::abs(r2 - r1);
        best.value = r2;
        best.attained_at = std::polar(1.0, phi);
      }
    } else {
      best.converged = false;
    }
  }
  return best;
}

double lipschitz_seminorm(const std::function<cplx(cplx)>& f, const Majorant& omega, LipschitzDomain domain,
                          std::size_t nodes) {
  const double h = kTwoPi / static_cast<double>(nodes);
  std::vector<cplx> values(nodes);
  for (std::size_t m = 0; m < nodes; ++m) values[m] = f(std::polar(1.0, h * static_cast<double>(m)));

  double best = 0.0;
  for (std::size_t d = 1; d <= nodes / 2; ++d) {
    const double w = omega(2.0 * std::sin(0.5 * h * static_cast<double>(d)));
    double largest = 0.0;
    for (std::size_t m = 0; m < nodes; ++m) largest = std::max(largest, std::abs(values[m] - values[(m + d) % nodes]));
    best = std::max(best, largest / w);
  }
  for (std::size_t m = 0; m < nodes; ++m) {
    const double theta = h * static_cast<double>(m);
    for (int j = 1; j <= 16; ++j) {
      const double step = h * std::ldexp(1.0, -j);
      const double w = omega(2.0 * std::sin(0.5 * step));
      best = std::max(best, std::abs(values[m] - f(std::polar(1.0, theta + step))) / w);
    }
    if (domain == LipschitzDomain::disk) {
      for (int j = 1; j <= 20; ++j) {
        const double gap = std::ldexp(1.0, -j);
        best = std::max(best, std::abs(values[m] - f(std::polar(1.0 - gap, theta))) / omega(gap));
      }
    }
  }
  return best;
}

// ---------------------------------------------------------------- Psi

PsiEvaluator::PsiEvaluator(const GtnSpec& spec, const DiskFunction& f) : spec_(spec), f_(f) {
  auto modulus = [this](double theta) { return f_.boundary_modulus(theta); };
  auto modulus_fn = [this](cplx z) { return cplx(std::abs(f_.outer(z))); };
  switch (spec_.psi) {
    case PsiKind::poisson_square: {
      extension_ = HarmonicExtension({[&](double t) {
        const double g = modulus(t);
        return g * g;
      }});
      error_ = extension_.truncation_error();
      break;
    }
    case PsiKind::m_omega: {
      seminorm_ = lipschitz_seminorm(modulus_fn, spec_.omega, LipschitzDomain::boundary);
      extension_ = HarmonicExtension({modulus});
      error_ = extension_.truncation_error();
      break;
    }
    case PsiKind::ntilde1: {
      seminorm_ = lipschitz_seminorm(modulus_fn, Majorant::power(1.0), LipschitzDomain::boundary);
      extension_ = HarmonicExtension({[&](double t) {
        const double g = modulus(t);
        if (!(g > kLogFloor))
          throw Error(ErrorCode::LogSingularity, "boundary modulus vanishes; outer function undefined");
        return std::log(g);
      }});
      // exp() turns an absolute error in the exponent into a relative one.
      error_ = 2.0 * extension_.truncation_error() * std::exp(extension_.mean()) *
               std::exp(extension_.truncation_error());
      break;
    }
  }
  converged_ = extension_.converged();
}

double PsiEvaluator::operator()(cplx z) const {
  const double gap = 1.0 - std::abs(z);
  switch (spec_.psi) {
    case PsiKind::poisson_square:
      return extension_(z);
    case PsiKind::m_omega:
      return seminorm_ * spec_.omega(gap) + extension_(z);
    case PsiKind::ntilde1: {
      const double outer = std::exp(extension_(z));
      const double radial = std::abs(z) > 0.0 ? std::arg(z) : 0.0;
      return seminorm_ * gap + std::abs(f_.boundary_modulus(radial) - outer) + outer;
    }
  }
  return 0.0;
}

DiskSupremumEstimate gtn_eval(const GtnSpec& spec, const DiskFunction& f, const DiskSupremumOptions& options) {
  if (!(spec.p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "GTN exponent p must be >= 1");
  const PsiEvaluator psi(spec, f);
  const double slack = psi.error();
  auto ratio = [&](cplx z) {
    const double psi_value = psi(z);
    const double fz = std::pow(std::abs(f(z)), spec.p);
    const double excess = psi_value - fz;
    if (excess < -(slack + 1e-9 * std::max(1.0, fz)))
      throw Error(ErrorCode::PsiAxiomViolation, "Psi(|f|, z) < |f(z)|^p at z = (" + std::to_string(z.real()) + ", " +
                                                    std::to_string(z.imag()) + ")");
    return std::pow(std::max(excess, 0.0), 1.0 / spec.p) / spec.weight_at(z);
  };
  auto estimate = disk_supremum(ratio, options);
  // Weight at the innermost sampled radius bounds the one at the attained point.
  const double radius = std::min(std::abs(estimate.attained_at), 1.0 - std::ldexp(1.0, -options.levels));
  estimate.refinement_error += std::pow(slack, 1.0 / spec.p) / spec.weight_at(radius);
  if (!psi.converged()) estimate.converged = false;
  return estimate;
}

DiskSupremumEstimate s_functional(const GtnSpec& spec, const DiskFunction& h, const BlaschkeProduct& theta,
                                  const DiskSupremumOptions& options) {
  auto ratio = [&](cplx z) {
    const double t = std::pow(std::abs(evaluate(theta, z)), spec.p);
    return std::abs(h(z)) * std::pow(std::max(1.0 - t, 0.0), 1.0 / spec.p) / spec.weight_at(z);
  };
  return disk_supremum(ratio, options);
}

DiskSupremumEstimate garsia_norm(const ComplexPolynomial& f, const DiskSupremumOptions& options) {
  return gtn_eval(GtnSpec::garsia(), DiskFunction::polynomial(f), options);
}

double m_omega_norm(const DiskFunction& f, const Majorant& omega, const DiskSupremumOptions& options) {
  try {
    majorant_regularity_constant(omega);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Divergence)
      throw Error(ErrorCode::NonRegularMajorant, omega.describe() + " is not a regular majorant");
    throw;
  }
  return gtn_eval(GtnSpec::m_omega(omega), f, options).value;
}

double higher_lipschitz_norm(const DiskFunction& f, double alpha) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw Error(ErrorCode::InvalidArgument, "higher Lipschitz order must be in (1,2)");
  auto fp = [&](cplx z) { return f.derivative_at(z); };
  const double sup = sup_norm_boundary({[&](double t) { return std::abs(fp(std::polar(1.0, t))); }}).value;
  return sup + lipschitz_seminorm(fp, Majorant::power(alpha - 1.0), LipschitzDomain::boundary);
}

}  // namespace gabc

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "garsia_abc/blaschke.hpp"
#include "garsia_abc/boundary.hpp"
#include "garsia_abc/poly.hpp"

namespace gabc {

/// Modulus of continuity: increasing, omega(0+) = 0, omega(t)/t nonincreasing.
class Majorant {
 public:
  enum class Kind { power, power_log, tabulated };

  /// t^alpha, 0 < alpha <= 1.
  static Majorant power(double alpha);
  /// t^alpha * log(e + 1/t)^{-epsilon}; needs 0 <= alpha < 1 and
  /// 0 < epsilon <= 1 - alpha (keeps omega(t)/t nonincreasing).
  static Majorant power_log(double alpha, double epsilon);
  /// Piecewise log-log linear through (t_i, omega_i); constant extrapolation
  /// of the log-log slope beyond the table. Validated on construction.
  static Majorant tabulated(std::vector<double> t, std::vector<double> omega);

  double operator()(double t) const;
  Kind kind() const noexcept { return kind_; }
  double alpha() const noexcept { return alpha_; }
  double epsilon() const noexcept { return epsilon_; }
  std::string describe() const;

  /// Checks the majorant axioms on a log-spaced grid in (1e-12, 4);
  /// throws InvalidArgument on failure.
  void validate() const;

 private:
  Kind kind_ = Kind::power;
  double alpha_ = 1.0;
  double epsilon_ = 0.0;
  std::vector<double> log_t_, log_omega_;
};

/// Best C in  int_0^d omega(t)/t dt + d int_d^inf omega(t)/t^2 dt <= C omega(d)
/// over a log-spaced grid of d in (0, 2). Throws Divergence when either
/// integral fails to settle.
double majorant_regularity_constant(const Majorant& omega);

enum class PsiKind { poisson_square, m_omega, ntilde1 };
enum class WeightKind { one, omega_gap, gap };

/// Parameters (p, Psi, k) of a Garsia-type norm.
struct GtnSpec {
  double p = 2.0;
  PsiKind psi = PsiKind::poisson_square;
  WeightKind weight = WeightKind::one;
  Majorant omega = Majorant::power(1.0);

  /// (2, P(g^2), 1): the classical Garsia norm.
  static GtnSpec garsia();
  /// (2, P(g^2), omega(1-|z|)).
  static GtnSpec garsia_omega(const Majorant& omega);
  /// (1, ||g||_{Lambda_omega(T)} omega(1-|z|) + P g, omega(1-|z|)).
  static GtnSpec m_omega(const Majorant& omega);
  /// (1, Lipschitz-1 Psi with the outer function, 1-|z|).
  static GtnSpec ntilde1();

  double weight_at(cplx z) const;
  std::string describe() const;
};

/// h * theta, with h a polynomial (outer part, possibly with zeros) and
/// theta a finite Blaschke product. Covers polynomials (theta = 1), Blaschke
/// products (h = 1) and products such as W * calB^n.
struct DiskFunction {
  ComplexPolynomial outer = ComplexPolynomial::constant(1.0);
  BlaschkeProduct inner;

  static DiskFunction polynomial(ComplexPolynomial p) { return {std::move(p), {}}; }
  static DiskFunction blaschke(BlaschkeProduct b) { return {ComplexPolynomial::constant(1.0), std::move(b)}; }

  cplx operator()(cplx z) const;
  cplx derivative_at(cplx z) const;
  /// |f| on the circle, which equals |h| there.
  double boundary_modulus(double theta) const;
  DiskFunction scaled(double lambda) const;
};

/// Lower-bound estimate of a supremum over the disk.
struct DiskSupremumEstimate {
  double value = 0.0;
  cplx attained_at{};
  double refinement_error = 0.0;
  bool converged = true;
};

struct DiskSupremumOptions {
  int levels = 14;                    // radii 1 - 2^{-i}, i = 0..levels
  std::size_t base_angular = 16;      // nodes at level i: base * 2^i
  std::size_t angular_cap = 8192;
  bool radial_extrapolation = true;
};

/// Radial-level scan, local pattern search around the best point, then
/// Richardson extrapolation along the best ray when the level maxima are
/// still increasing at the last level.
DiskSupremumEstimate disk_supremum(const std::function<double(cplx)>& f, const DiskSupremumOptions& options = {});

enum class LipschitzDomain { boundary, disk };

inline constexpr std::size_t kLipschitzNodes = 1024;

/// sup |f(z1) - f(z2)| / omega(|z1 - z2|) over sampled pairs: all pairs on a
/// boundary grid, dyadic near pairs, and in disk mode radial pairs
/// (z, (1 - 2^{-j}) z). A lower bound on the true seminorm.
double lipschitz_seminorm(const std::function<cplx(cplx)>& f, const Majorant& omega,
                          LipschitzDomain domain = LipschitzDomain::boundary, std::size_t nodes = kLipschitzNodes);

/// Psi(|f|, z) for a fixed f, with all boundary data precomputed.
class PsiEvaluator {
 public:
  PsiEvaluator(const GtnSpec& spec, const DiskFunction& f);

  double operator()(cplx z) const;
  /// Absolute error allowance of operator() from the truncated series.
  double error() const noexcept { return error_; }
  bool converged() const noexcept { return converged_; }
  double boundary_seminorm() const noexcept { return seminorm_; }

 private:
  GtnSpec spec_;
  DiskFunction f_;
  HarmonicExtension extension_;
  double seminorm_ = 0.0;
  double error_ = 0.0;
  bool converged_ = true;
};

/// N_{p,Psi,k}(f) = sup_z {Psi(|f|,z) - |f(z)|^p}^{1/p} / k(z).
/// Throws PsiAxiomViolation if Psi falls below |f|^p beyond tolerance.
DiskSupremumEstimate gtn_eval(const GtnSpec& spec, const DiskFunction& f, const DiskSupremumOptions& options = {});

/// S_{p,k}(h, theta) = sup_z |h(z)| (1 - |theta(z)|^p)^{1/p} / k(z).
DiskSupremumEstimate s_functional(const GtnSpec& spec, const DiskFunction& h, const BlaschkeProduct& theta,
                                  const DiskSupremumOptions& options = {});

DiskSupremumEstimate garsia_norm(const ComplexPolynomial& f, const DiskSupremumOptions& options = {});

/// M_omega(f); throws NonRegularMajorant when omega is not regular.
double m_omega_norm(const DiskFunction& f, const Majorant& omega, const DiskSupremumOptions& options = {});

/// Natural norm on A^alpha, 1 < alpha < 2, through the derivative:
/// ||f'||_inf + ||f'||_{Lambda^{alpha-1}(T)}. Vanishes on constants.
double higher_lipschitz_norm(const DiskFunction& f, double alpha);

}  // namespace gabc

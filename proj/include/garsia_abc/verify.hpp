#pragma once

#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "garsia_abc/blaschke.hpp"
#include "garsia_abc/config.hpp"
#include "garsia_abc/norms.hpp"
#include "garsia_abc/poly.hpp"

namespace gabc {

/// f_0..f_n as given plus f_{n+1} = f_0 + ... + f_n.
struct AbcInstance {
  std::vector<ComplexPolynomial> fs;
  int n = 0;

  std::span<const ComplexPolynomial> given() const { return std::span(fs).first(static_cast<std::size_t>(n) + 1); }
  const ComplexPolynomial& sum() const { return fs.back(); }
};

/// Throws DegenerateInput when fewer than two functions are given or any
/// f_j (including the sum) vanishes identically.
AbcInstance assemble(std::span<const ComplexPolynomial> given);

/// F = W calB^n / bigB kept in factored form: a polynomial (W with the
/// cancelled zeros divided out) times Blaschke factors to positive powers.
struct FactoredQuotient {
  struct Factor {
    cplx location;
    int exponent;
  };
  ComplexPolynomial numerator;
  std::vector<Factor> factors;

  cplx operator()(cplx z) const;
};

struct WronskianObjects {
  ComplexPolynomial W;
  std::vector<BlaschkeProduct> Bs;
  BlaschkeProduct bigB;  // LCM(B_0, ..., B_{n+1})
  BlaschkeProduct calB;  // rad(B_0 ... B_{n+1})
  FactoredQuotient F;
};

/// Throws DivisibilityFailure when W does not vanish to order >= k - n at a
/// zero of bigB of multiplicity k > n.
WronskianObjects build_objects(const AbcInstance& inst, const RunConfig& config = {});

enum class Theorem { mason, theorem_b, theorem_c, main, prop1, prop2 };

const char* to_string(Theorem t) noexcept;
std::optional<Theorem> parse_theorem(std::string_view name) noexcept;

struct Check {
  bool pass = false;
  double value = 0.0;
};

/// Named checks; std::map keeps report ordering stable.
using CheckMap = std::map<std::string, Check>;

enum class Verdict { holds, violated, hypotheses_failed };

const char* to_string(Verdict v) noexcept;

struct VerificationReport {
  Theorem theorem = Theorem::theorem_c;
  std::string space;  // GTN / majorant description where relevant
  CheckMap hypotheses;
  std::map<std::string, double> quantities;
  /// Proof-chain and auxiliary inequalities; value is the slack.
  CheckMap chain;
  double slack = 0.0;
  double tolerance = 0.0;
  Verdict verdict = Verdict::hypotheses_failed;
  std::vector<std::string> diagnostics;

  bool hypotheses_pass() const;
  /// verdict = holds iff all hypotheses pass and slack >= -tolerance.
  void settle();
};

/// Hypotheses for the selected theorem. For mason the instance is (a, b)
/// with c = a + b; for theorem_b it is (p_0, ..., p_n).
CheckMap check_hypotheses(const AbcInstance& inst, Theorem theorem, const RunConfig& config = {});

/// Exact (integer) checks.
VerificationReport verify_mason(const ComplexPolynomial& a, const ComplexPolynomial& b, const ComplexPolynomial& c,
                                const RunConfig& config = {});
VerificationReport verify_theorem_b(std::span<const ComplexPolynomial> ps, const RunConfig& config = {});

VerificationReport verify_theorem_c(const AbcInstance& inst, const RunConfig& config = {});
VerificationReport verify_main(const AbcInstance& inst, const GtnSpec& spec, const RunConfig& config = {});
VerificationReport verify_prop1(const AbcInstance& inst, const RunConfig& config = {});
/// Throws NonRegularMajorant for non-regular omega.
VerificationReport verify_prop2(const AbcInstance& inst, const Majorant& omega, const RunConfig& config = {});

/// f_0 = 1, f_j = eps z^j / j!. Throws EpsTooLarge if f_{n+1} has a root in
/// the closed disk (up to the boundary margin).
std::vector<ComplexPolynomial> sharpness_family(int n, double eps, const RunConfig& config = {});

struct GrowthRow {
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

struct GrowthReport {
  double alpha = 0.0;
  double eps = 0.0;
  std::vector<GrowthRow> rows;
  /// Least-squares slope of log ratio against log n; empty for < 2 distinct n.
  std::optional<double> slope;
};

GrowthReport counterexample_sweep(double alpha, std::span<const int> ns, double eps, const RunConfig& config = {});

struct LimitRow {
  double radius = 0.0;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  double kappa = 0.0;
  double mu = 0.0;
  double tolerance = 0.0;
};

struct LimitReport {
  std::vector<LimitRow> rows;
  /// deg a + deg b + deg c: the value bigB's zero count reaches once every
  /// root lies inside the rescaled disk.
  int full_count = 0;
  double largest_root_modulus = 0.0;
  bool holds_everywhere = true;
  bool stabilized = true;
};

LimitReport mason_limit_experiment(const ComplexPolynomial& a, const ComplexPolynomial& b, const ComplexPolynomial& c,
                                   std::span<const double> radii, const RunConfig& config = {});

/// Random instance with roots uniform in 0.8 D: n in [1, max_n], each f_j of
/// degree in [0, max_degree]. Resamples until the Theorem C hypotheses hold
/// and the Wronskian keeps its roots at least min_wronskian_margin off the
/// circle.
AbcInstance random_instance(std::mt19937_64& rng, int max_n = 2, int max_degree = 5,
                            double min_wronskian_margin = 0.05, const RunConfig& config = {});

}  // namespace gabc

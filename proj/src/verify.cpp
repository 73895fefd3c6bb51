#include "garsia_abc/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "garsia_abc/boundary.hpp"
#include "garsia_abc/error.hpp"

namespace gabc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double boundary_abs(const ComplexPolynomial& p, double theta) { return std::abs(p(std::polar(1.0, theta))); }

// min over roots of ||r| - 1|, +inf when p has no roots.
double root_margin(const ComplexPolynomial& p, double cluster_tolerance) {
  double margin = kInf;
  if (p.degree() >= 1)
    for (const auto& r : find_roots(p, cluster_tolerance).roots)
      margin = std::min(margin, std::abs(std::abs(r.location) - 1.0));
  return margin;
}

std::size_t distinct_root_count(std::span<const ComplexPolynomial> ps, double cluster_tolerance) {
  std::vector<cplx> all;
  for (const auto& p : ps)
    if (p.degree() >= 1) {
      for (const auto& r : find_roots(p, cluster_tolerance).roots) all.push_back(r.location);
    }
  return cluster_points(all, cluster_tolerance).distinct();
}

double min_cross_distance(const ComplexPolynomial& p, const ComplexPolynomial& q, double cluster_tolerance) {
  if (p.degree() < 1 || q.degree() < 1) return kInf;
  double best = kInf;
  const auto rp = find_roots(p, cluster_tolerance).roots;
  const auto rq = find_roots(q, cluster_tolerance).roots;
  for (const auto& a : rp)
    for (const auto& b : rq) best = std::min(best, std::abs(a.location - b.location));
  return best;
}

int max_degree(std::span<const ComplexPolynomial> ps) {
  int d = 0;
  for (const auto& p : ps) d = std::max(d, p.degree());
  return d;
}

double n_root(int n, double p) { return std::pow(static_cast<double>(n), 1.0 / p); }

}  // namespace

AbcInstance assemble(std::span<const ComplexPolynomial> given) {
  if (given.size() < 2) throw Error(ErrorCode::DegenerateInput, "need at least two functions");
  AbcInstance inst;
  inst.n = static_cast<int>(given.size()) - 1;
  ComplexPolynomial sum;
  for (const auto& f : given) {
    if (f.is_zero()) throw Error(ErrorCode::DegenerateInput, "a given function vanishes identically");
    inst.fs.push_back(f);
    sum += f;
  }
  if (sum.is_zero()) throw Error(ErrorCode::DegenerateInput, "f_{n+1} vanishes identically; its Blaschke product is undefined");
  inst.fs.push_back(std::move(sum));
  return inst;
}

namespace {

// p / (z - a), dropping the remainder; callers have already checked that a
// is a root of the required order.
ComplexPolynomial deflate(const ComplexPolynomial& p, cplx a) {
  const int d = static_cast<int>(p.degree());
  if (d < 1) return ComplexPolynomial{};
  std::vector<cplx> q(static_cast<std::size_t>(d));
  cplx carry = 0.0;
  for (int i = d; i >= 1; --i) {
    carry = p[static_cast<std::size_t>(i)] + carry * a;
    q[static_cast<std::size_t>(i - 1)] = carry;
  }
  return ComplexPolynomial(std::move(q));
}

}  // namespace

cplx FactoredQuotient::operator()(cplx z) const {
  cplx value = numerator(z);
  for (const auto& f : factors) {
    const cplx b = (z - f.location) / (1.0 - std::conj(f.location) * z);
    value *= std::pow(b, f.exponent);
  }
  return value;
}

WronskianObjects build_objects(const AbcInstance& inst, const RunConfig& config) {
  WronskianObjects obj;
  obj.W = wronskian(inst.given());
  BlaschkeProduct all;
  for (const auto& f : inst.fs) {
    obj.Bs.push_back(from_polynomial(f, config.boundary_margin, config.cluster_tolerance));
    all = product(all, obj.Bs.back());
  }
  obj.bigB = lcm(obj.Bs, config.match_tolerance);
  obj.calB = radical(all);

  obj.F.numerator = obj.W;
  for (const auto& zero : obj.bigB.zeros()) {
    const int k = zero.multiplicity;
    if (k > inst.n) {
      if (obj.W.is_zero())
        throw Error(ErrorCode::DivisibilityFailure, "Wronskian vanishes identically");
      const int order = multiplicity_at(obj.W, zero.location, config.multiplicity_tolerance);
      if (order < k - inst.n)
        throw Error(ErrorCode::DivisibilityFailure,
                    "W vanishes to order " + std::to_string(order) + " < " + std::to_string(k - inst.n) +
                        " at a zero of multiplicity " + std::to_string(k));
    }
    if (k < inst.n) {
      obj.F.factors.push_back({zero.location, inst.n - k});
    } else {
      // 1 / b_a^m = ((1 - conj(a) z) / (z - a))^m, folded into the numerator
      // so F stays finite at a.
      const ComplexPolynomial conj_side{1.0, -std::conj(zero.location)};
      for (int m = 0; m < k - inst.n; ++m)
        obj.F.numerator = deflate(obj.F.numerator, zero.location) * conj_side;
    }
  }
  return obj;
}

const char* to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::mason: return "mason";
    case Theorem::theorem_b: return "theorem-b";
    case Theorem::theorem_c: return "theorem-c";
    case Theorem::main: return "main";
    case Theorem::prop1: return "prop1";
    case Theorem::prop2: return "prop2";
  }
  return "unknown";
}

std::optional<Theorem> parse_theorem(std::string_view name) noexcept {
  for (Theorem t : {Theorem::mason, Theorem::theorem_b, Theorem::theorem_c, Theorem::main, Theorem::prop1,
                    Theorem::prop2})
    if (name == to_string(t)) return t;
  return std::nullopt;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::hypotheses_failed: return "hypotheses_failed";
  }
  return "unknown";
}

bool VerificationReport::hypotheses_pass() const {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const auto& kv) { return kv.second.pass; });
}

void VerificationReport::settle() {
  if (!hypotheses_pass())
    verdict = Verdict::hypotheses_failed;
  else
    verdict = slack >= -tolerance ? Verdict::holds : Verdict::violated;
}

CheckMap check_hypotheses(const AbcInstance& inst, Theorem theorem, const RunConfig& config) {
  CheckMap out;
  switch (theorem) {
    case Theorem::mason: {
      const auto& a = inst.fs[0];
      const auto& b = inst.fs[1];
      out["not_all_constant"] = {max_degree(inst.fs) >= 1, static_cast<double>(max_degree(inst.fs))};
      const double gap = min_cross_distance(a, b, config.cluster_tolerance);
      out["no_common_zeros"] = {gap > config.cluster_tolerance, gap};
      break;
    }
    case Theorem::theorem_b: {
      out["linear_independence"] = {linear_independence(inst.given()), 0.0};
      double gap = kInf;
      for (std::size_t i = 0; i < inst.fs.size(); ++i)
        for (std::size_t j = i + 1; j < inst.fs.size(); ++j)
          gap = std::min(gap, min_cross_distance(inst.fs[i], inst.fs[j], config.cluster_tolerance));
      out["pairwise_disjoint_zeros"] = {gap > config.cluster_tolerance, gap};
      break;
    }
    case Theorem::theorem_c:
    case Theorem::main:
    case Theorem::prop1:
    case Theorem::prop2: {
      double classify = kInf;
      for (const auto& f : inst.fs) classify = std::min(classify, root_margin(f, config.cluster_tolerance));
      out["roots_classifiable"] = {classify > config.boundary_margin, classify};
      const ComplexPolynomial W = wronskian(inst.given());
      if (W.is_zero()) {
        out["wronskian_zero_free_on_circle"] = {false, 0.0};
      } else {
        const auto margin = zero_free_margin(W);
        out["wronskian_zero_free_on_circle"] = {
            margin.root_margin > config.zero_free_threshold && margin.boundary_min > 0.0, margin.root_margin};
      }
      break;
    }
  }
  return out;
}

VerificationReport verify_mason(const ComplexPolynomial& a, const ComplexPolynomial& b, const ComplexPolynomial& c,
                                const RunConfig& config) {
  const double scale = std::max({a.max_abs_coeff(), b.max_abs_coeff(), c.max_abs_coeff(), 1e-300});
  if ((a + b - c).max_abs_coeff() > 1e-12 * scale) throw Error(ErrorCode::SumMismatch, "a + b != c");

  VerificationReport report;
  report.theorem = Theorem::mason;
  AbcInstance inst;
  inst.fs = {a, b, c};
  inst.n = 1;
  report.hypotheses = check_hypotheses(inst, Theorem::mason, config);
  const ComplexPolynomial abc[] = {a, b, c};
  const int lhs = max_degree(abc);
  const bool any_zero = a.is_zero() || b.is_zero() || c.is_zero();
  const int distinct = any_zero ? 0 : static_cast<int>(distinct_root_count(abc, config.cluster_tolerance));
  if (any_zero) report.hypotheses["nonzero_inputs"] = {false, 0.0};
  const int rhs = distinct - 1;
  report.quantities = {{"lhs", lhs}, {"rhs", rhs}, {"distinct_zeros", distinct}};
  report.slack = rhs - lhs;
  report.tolerance = 0.0;
  report.settle();
  return report;
}

VerificationReport verify_theorem_b(std::span<const ComplexPolynomial> ps, const RunConfig& config) {
  const AbcInstance inst = assemble(ps);
  VerificationReport report;
  report.theorem = Theorem::theorem_b;
  report.hypotheses = check_hypotheses(inst, Theorem::theorem_b, config);
  const int n = inst.n;
  const int lhs = max_degree(inst.fs);
  const int distinct = static_cast<int>(distinct_root_count(inst.fs, config.cluster_tolerance));
  const int rhs = n * distinct - n * (n + 1) / 2;
  report.quantities = {{"lhs", lhs}, {"rhs", rhs}, {"distinct_zeros", distinct}, {"n", n}};
  report.slack = rhs - lhs;
  report.tolerance = 0.0;
  report.settle();
  return report;
}

namespace {

struct WronskianScalars {
  double inv_sup = 0.0;  // ||1/W||_inf
  BoundaryExtremum sup;  // ||W||_inf
  double mu = 0.0;
};

WronskianScalars wronskian_scalars(const ComplexPolynomial& W, const RunConfig& config) {
  WronskianScalars s;
  s.inv_sup = inv_sup_norm(W, config.zero_free_threshold);
  s.sup = sup_norm_boundary({[&](double t) { return boundary_abs(W, t); }});
  s.mu = s.sup.value * s.inv_sup;
  return s;
}

// Shared prologue: hypotheses, and early exit when they fail.
bool open_report(VerificationReport& report, const AbcInstance& inst, Theorem theorem, const RunConfig& config) {
  report.theorem = theorem;
  report.hypotheses = check_hypotheses(inst, theorem, config);
  report.quantities["n"] = inst.n;
  if (!report.hypotheses_pass()) {
    report.diagnostics.emplace_back("hypotheses failed; inequality not evaluated");
    report.settle();
    return false;
  }
  return true;
}

}  // namespace

VerificationReport verify_theorem_c(const AbcInstance& inst, const RunConfig& config) {
  VerificationReport report;
  if (!open_report(report, inst, Theorem::theorem_c, config)) return report;
  const auto obj = build_objects(inst, config);
  const auto scalars = wronskian_scalars(obj.W, config);
  const ComplexPolynomial Wp = derivative(obj.W);
  QuadratureResult mean{0.0, 0.0, 0};
  if (!Wp.is_zero()) mean = circle_mean({[&](double t) { return boundary_abs(Wp, t); }}, {}, config.quadrature());

  const double kappa = mean.value * scalars.inv_sup;
  const int n = inst.n;
  const double lhs = zero_count(obj.bigB);
  const double count_calB = zero_count(obj.calB);
  const double rhs = kappa + n * scalars.mu * count_calB;
  report.quantities["kappa"] = kappa;
  report.quantities["mu"] = scalars.mu;
  report.quantities["lhs"] = lhs;
  report.quantities["rhs"] = rhs;
  report.quantities["w_prime_l1"] = mean.value;
  report.quantities["w_sup"] = scalars.sup.value;
  report.quantities["w_inv_sup"] = scalars.inv_sup;
  report.quantities["zero_count_bigB"] = lhs;
  report.quantities["zero_count_calB"] = count_calB;
  report.slack = rhs - lhs;
  report.tolerance = config.theorem_c_tolerance + mean.error * scalars.inv_sup +
                     n * count_calB * scalars.sup.refinement_error * scalars.inv_sup;
  report.settle();
  return report;
}

VerificationReport verify_main(const AbcInstance& inst, const GtnSpec& spec, const RunConfig& config) {
  if (!(spec.p >= 1.0)) throw Error(ErrorCode::InvalidArgument, "main theorem requires p >= 1");
  VerificationReport report;
  report.space = spec.describe();
  if (!open_report(report, inst, Theorem::main, config)) return report;
  const auto obj = build_objects(inst, config);
  const auto scalars = wronskian_scalars(obj.W, config);
  const int n = inst.n;
  const double root = n_root(n, spec.p);
  const auto& opts = config.disk;

  const auto nW = gtn_eval(spec, DiskFunction::polynomial(obj.W), opts);
  const auto nBig = gtn_eval(spec, DiskFunction::blaschke(obj.bigB), opts);
  const auto nCal = gtn_eval(spec, DiskFunction::blaschke(obj.calB), opts);
  const BlaschkeProduct calB_n = power(obj.calB, n);
  const auto nProduct = gtn_eval(spec, DiskFunction{obj.W, calB_n}, opts);
  const auto sW = s_functional(spec, DiskFunction::polynomial(obj.W), calB_n, opts);
  const auto sOne_n = s_functional(spec, DiskFunction{}, calB_n, opts);
  const auto sOne = s_functional(spec, DiskFunction{}, obj.calB, opts);

  const double gamma = nW.value * scalars.inv_sup;
  const double lhs = nBig.value;
  const double rhs = gamma + scalars.mu * root * nCal.value;
  const double base = 1e-9 * (1.0 + std::abs(rhs));

  report.quantities["gamma"] = gamma;
  report.quantities["mu"] = scalars.mu;
  report.quantities["lhs"] = lhs;
  report.quantities["rhs"] = rhs;
  report.quantities["N_W"] = nW.value;
  report.quantities["N_bigB"] = nBig.value;
  report.quantities["N_calB"] = nCal.value;
  report.quantities["N_W_calB_n"] = nProduct.value;
  report.quantities["S_W_calB_n"] = sW.value;
  report.quantities["w_sup"] = scalars.sup.value;
  report.quantities["w_inv_sup"] = scalars.inv_sup;
  report.quantities["p"] = spec.p;

  report.slack = rhs - lhs;
  report.tolerance = base + nBig.refinement_error + scalars.inv_sup * nW.refinement_error +
                     scalars.mu * root * nCal.refinement_error +
                     root * nCal.value * scalars.inv_sup * scalars.sup.refinement_error;
  report.quantities["refinement_budget"] = report.tolerance;

  // N(W calB^n) >= ||1/W||^{-1} N(bigB)
  {
    const double slack = nProduct.value - nBig.value / scalars.inv_sup;
    const double tol = base + nProduct.refinement_error + nBig.refinement_error / scalars.inv_sup;
    report.chain["lower_bound_via_outer_factor"] = {slack >= -tol, slack};
  }
  // N(W calB^n) <= N(W) + n^{1/p} ||W|| N(calB)
  {
    const double upper = nW.value + root * scalars.sup.value * nCal.value;
    const double slack = upper - nProduct.value;
    const double tol = base + nProduct.refinement_error + nW.refinement_error +
                       root * (scalars.sup.value * nCal.refinement_error + scalars.sup.refinement_error * nCal.value);
    report.chain["upper_bound_via_power_inequality"] = {slack >= -tol, slack};
  }
  // max{N(h), S(h, theta)} <= N(h theta) <= N(h) + S(h, theta), h = W, theta = calB^n
  {
    const double tol = base + nProduct.refinement_error + nW.refinement_error + sW.refinement_error;
    const double below = nProduct.value - std::max(nW.value, sW.value);
    const double above = nW.value + sW.value - nProduct.value;
    report.chain["sandwich_lower"] = {below >= -tol, below};
    report.chain["sandwich_upper"] = {above >= -tol, above};
  }
  // S(1, theta^n) <= n^{1/p} S(1, theta)
  {
    const double slack = root * sOne.value - sOne_n.value;
    const double tol = base + sOne_n.refinement_error + root * sOne.refinement_error;
    report.chain["power_inequality"] = {slack >= -tol, slack};
  }
  // N(theta) = S(1, theta) for inner theta
  {
    const double diff = std::abs(nCal.value - sOne.value);
    const double tol = base + nCal.refinement_error + sOne.refinement_error;
    report.chain["inner_norm_equals_s_functional"] = {diff <= tol, diff};
  }

  for (const auto* e : {&nW, &nBig, &nCal, &nProduct, &sW, &sOne, &sOne_n})
    if (!e->converged) {
      report.diagnostics.emplace_back("a disk supremum did not converge; value is a lower bound");
      break;
    }
  report.settle();
  return report;
}

namespace {

double blaschke_derivative_sup(const BlaschkeProduct& b) {
  if (b.empty()) return 0.0;
  return sup_norm_boundary({[&](double t) { return boundary_derivative_modulus(b, t); }}).value;
}

void settle_ratio(VerificationReport& report, double lhs, double rhs, const RunConfig& config) {
  double ratio = 0.0;
  if (rhs > 0.0)
    ratio = lhs / rhs;
  else if (lhs > 0.0)
    ratio = kInf;
  report.quantities["lhs"] = lhs;
  report.quantities["rhs"] = rhs;
  report.quantities["ratio"] = ratio;
  report.quantities["ratio_cap"] = config.ratio_cap;
  report.slack = config.ratio_cap - ratio;
  report.tolerance = 0.0;
  report.settle();
}

}  // namespace

VerificationReport verify_prop1(const AbcInstance& inst, const RunConfig& config) {
  VerificationReport report;
  if (!open_report(report, inst, Theorem::prop1, config)) return report;
  const auto obj = build_objects(inst, config);
  const auto scalars = wronskian_scalars(obj.W, config);
  const ComplexPolynomial Wp = derivative(obj.W);
  const double wp_sup = Wp.is_zero() ? 0.0 : sup_norm_boundary({[&](double t) { return boundary_abs(Wp, t); }}).value;
  const double big = blaschke_derivative_sup(obj.bigB);
  const double cal = blaschke_derivative_sup(obj.calB);
  const double rhs = scalars.inv_sup * (wp_sup + inst.n * scalars.sup.value * cal);
  report.quantities["bigB_prime_sup"] = big;
  report.quantities["calB_prime_sup"] = cal;
  report.quantities["w_prime_sup"] = wp_sup;
  report.quantities["mu"] = scalars.mu;
  report.quantities["w_inv_sup"] = scalars.inv_sup;
  settle_ratio(report, big, rhs, config);
  return report;
}

VerificationReport verify_prop2(const AbcInstance& inst, const Majorant& omega, const RunConfig& config) {
  double regularity = 0.0;
  try {
    regularity = majorant_regularity_constant(omega);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Divergence)
      throw Error(ErrorCode::NonRegularMajorant, omega.describe() + " is not a regular majorant");
    throw;
  }
  VerificationReport report;
  report.space = omega.describe();
  if (!open_report(report, inst, Theorem::prop2, config)) return report;
  const auto obj = build_objects(inst, config);
  const auto scalars = wronskian_scalars(obj.W, config);
  auto blaschke_seminorm = [&](const BlaschkeProduct& b) {
    if (b.empty()) return 0.0;
    return lipschitz_seminorm([&](cplx z) { return evaluate(b, z); }, omega, LipschitzDomain::disk);
  };
  const double w_lip = lipschitz_seminorm([&](cplx z) { return obj.W(z); }, omega, LipschitzDomain::disk);
  const double big = blaschke_seminorm(obj.bigB);
  const double cal = blaschke_seminorm(obj.calB);
  const double rhs = scalars.inv_sup * (w_lip + inst.n * scalars.sup.value * cal);
  report.quantities["regularity_constant"] = regularity;
  report.quantities["bigB_lipschitz"] = big;
  report.quantities["calB_lipschitz"] = cal;
  report.quantities["w_lipschitz"] = w_lip;
  report.quantities["mu"] = scalars.mu;
  settle_ratio(report, big, rhs, config);
  return report;
}

std::vector<ComplexPolynomial> sharpness_family(int n, double eps, const RunConfig& config) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "sharpness family needs n >= 1");
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "sharpness family needs eps > 0");
  std::vector<ComplexPolynomial> fs{ComplexPolynomial::constant(1.0)};
  double factorial = 1.0;
  for (int j = 1; j <= n; ++j) {
    factorial *= j;
    fs.push_back(ComplexPolynomial::monomial(eps / factorial, static_cast<std::size_t>(j)));
  }
  ComplexPolynomial sum;
  for (const auto& f : fs) sum += f;
  for (const auto& r : find_roots(sum, config.cluster_tolerance).roots)
    if (std::abs(r.location) < 1.0 + config.boundary_margin)
      throw Error(ErrorCode::EpsTooLarge, "f_{n+1} has a root of modulus " + std::to_string(std::abs(r.location)) +
                                              " in the closed disk");
  return fs;
}

GrowthReport counterexample_sweep(double alpha, std::span<const int> ns, double eps, const RunConfig& config) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw Error(ErrorCode::InvalidArgument, "alpha must lie in (1, 2)");
  GrowthReport report;
  report.alpha = alpha;
  report.eps = eps;
  for (int n : ns) {
    const auto inst = assemble(sharpness_family(n, eps, config));
    const auto obj = build_objects(inst, config);
    const auto scalars = wronskian_scalars(obj.W, config);
    GrowthRow row;
    row.n = n;
    row.lhs = higher_lipschitz_norm(DiskFunction::blaschke(obj.bigB), alpha);
    const double w_norm = higher_lipschitz_norm(DiskFunction::polynomial(obj.W), alpha);
    const double cal_norm = higher_lipschitz_norm(DiskFunction::blaschke(obj.calB), alpha);
    row.rhs = scalars.inv_sup * (w_norm + n * scalars.sup.value * cal_norm);
    row.ratio = row.lhs / row.rhs;
    report.rows.push_back(row);
  }
  std::vector<double> xs, ys;
  for (const auto& r : report.rows) {
    xs.push_back(std::log(static_cast<double>(r.n)));
    ys.push_back(std::log(r.ratio));
  }
  const bool spread = xs.size() >= 2 && *std::max_element(xs.begin(), xs.end()) > *std::min_element(xs.begin(), xs.end());
  if (spread) {
    const double count = static_cast<double>(xs.size());
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i] / count;
      my += ys[i] / count;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    report.slope = sxy / sxx;
  }
  return report;
}

LimitReport mason_limit_experiment(const ComplexPolynomial& a, const ComplexPolynomial& b, const ComplexPolynomial& c,
                                   std::span<const double> radii, const RunConfig& config) {
  const auto mason = verify_mason(a, b, c, config);
  if (!mason.hypotheses_pass())
    throw Error(ErrorCode::HypothesisViolated, "Mason hypotheses fail for the limit experiment");
  LimitReport report;
  report.full_count = std::max(a.degree(), 0) + std::max(b.degree(), 0) + std::max(c.degree(), 0);
  std::vector<double> moduli;
  for (const auto* p : {&a, &b, &c})
    if (p->degree() >= 1)
      for (const auto& r : find_roots(*p, config.cluster_tolerance).roots) moduli.push_back(std::abs(r.location));
  for (double m : moduli) report.largest_root_modulus = std::max(report.largest_root_modulus, m);

  for (double radius : radii) {
    if (!(radius > 0.0)) throw Error(ErrorCode::InvalidArgument, "radius must be positive");
    for (double m : moduli)
      if (std::abs(m - radius) <= config.boundary_margin * radius)
        throw Error(ErrorCode::BoundaryRoot, "a root has modulus ~ R = " + std::to_string(radius) + "; perturb R");
    const ComplexPolynomial given[] = {rescale(a, radius), rescale(b, radius)};
    const auto inst = assemble(given);
    const auto r = verify_theorem_c(inst, config);
    LimitRow row;
    row.radius = radius;
    row.lhs = r.quantities.at("lhs");
    row.rhs = r.quantities.at("rhs");
    row.slack = r.slack;
    row.kappa = r.quantities.at("kappa");
    row.mu = r.quantities.at("mu");
    row.tolerance = r.tolerance;
    if (r.verdict != Verdict::holds) report.holds_everywhere = false;
    if (radius > report.largest_root_modulus && static_cast<int>(std::lround(row.lhs)) != report.full_count)
      report.stabilized = false;
    report.rows.push_back(row);
  }
  return report;
}

AbcInstance random_instance(std::mt19937_64& rng, int max_n, int max_degree, double min_wronskian_margin,
                            const RunConfig& config) {
  std::uniform_int_distribution<int> pick_n(1, max_n);
  std::uniform_int_distribution<int> pick_degree(0, max_degree);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    const int n = pick_n(rng);
    std::vector<ComplexPolynomial> given;
    bool nonconstant = false;
    for (int j = 0; j <= n; ++j) {
      const int degree = pick_degree(rng);
      nonconstant = nonconstant || degree > 0;
      ComplexPolynomial f =
          ComplexPolynomial::constant(std::polar(0.5 + 1.5 * unit(rng), 2.0 * std::numbers::pi * unit(rng)));
      for (int k = 0; k < degree; ++k) {
        const cplx root = std::polar(0.8 * std::sqrt(unit(rng)), 2.0 * std::numbers::pi * unit(rng));
        f = f * ComplexPolynomial{-root, 1.0};
      }
      given.push_back(std::move(f));
    }
    if (!nonconstant) continue;
    try {
      auto inst = assemble(given);
      const auto hyps = check_hypotheses(inst, Theorem::theorem_c, config);
      if (!std::all_of(hyps.begin(), hyps.end(), [](const auto& kv) { return kv.second.pass; })) continue;
      if (hyps.at("wronskian_zero_free_on_circle").value < min_wronskian_margin) continue;
      if (hyps.at("roots_classifiable").value < min_wronskian_margin) continue;
      build_objects(inst, config);
      return inst;
    } catch (const Error&) {
      continue;
    }
  }
  throw Error(ErrorCode::NonConvergence, "random instance generator exhausted its attempts");
}

}  // namespace gabc

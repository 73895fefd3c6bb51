#include <doctest.h>

#include <random>

#include "garsia_abc/error.hpp"
#include "garsia_abc/norms.hpp"
#include "oracles.hpp"

using namespace gabc;
using oracle::cplx;

namespace {

const GtnSpec kSpecs[] = {GtnSpec::garsia(), GtnSpec::ntilde1()};

ComplexPolynomial zero_free_on_circle(std::mt19937_64& rng, int degree) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<cplx> roots;
  for (int k = 0; k < degree; ++k) {
    const double r = u(rng) < 0.5 ? 0.2 + 0.6 * u(rng) : 1.2 + 0.8 * u(rng);
    roots.push_back(std::polar(r, 2 * oracle::kPi * u(rng)));
  }
  return ComplexPolynomial(oracle::from_roots(std::polar(0.5 + u(rng), 2 * oracle::kPi * u(rng)), roots));
}

BlaschkeProduct random_inner(std::mt19937_64& rng, int max_zeros) {
  std::uniform_int_distribution<int> count(1, max_zeros);
  std::vector<BlaschkeProduct::Zero> zs;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) zs.push_back({oracle::random_in_disk(rng, 0.8), 1});
  return BlaschkeProduct::from_zeros(zs);
}

BlaschkeProduct monomial_inner(int n) {
  const BlaschkeProduct::Zero z{0.0, n};
  return BlaschkeProduct::from_zeros(std::span(&z, 1));
}

}  // namespace

TEST_CASE("majorant construction and axioms") {
  CHECK(Majorant::power(0.5)(0.25) == doctest::Approx(0.5));
  CHECK_THROWS_AS(Majorant::power(0.0), Error);
  CHECK_THROWS_AS(Majorant::power(1.5), Error);
  CHECK_NOTHROW(Majorant::power_log(0.5, 0.3).validate());
  CHECK_THROWS_AS(Majorant::power_log(0.8, 0.5), Error);
  const auto tab = Majorant::tabulated({1e-6, 1e-3, 1.0, 4.0}, {1e-3, 0.03, 1.0, 2.0});
  CHECK(tab(1e-3) == doctest::Approx(0.03));
  CHECK(tab(0.1) > tab(0.01));
  CHECK_THROWS_AS(Majorant::tabulated({1e-6, 1.0}, {1.0, 0.5}), Error);
  // omega(t)/t increasing: fails the axioms.
  CHECK_THROWS_AS(Majorant::tabulated({1e-3, 1.0}, {1e-9, 1.0}), Error);
}

TEST_CASE("regular-majorant constant") {
  // For t^a the two integrals are 1/a and 1/(1-a) in units of omega(d).
  CHECK(majorant_regularity_constant(Majorant::power(0.5)) == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(majorant_regularity_constant(Majorant::power(0.25)) == doctest::Approx(16.0 / 3.0).epsilon(1e-6));
  try {
    majorant_regularity_constant(Majorant::power(1.0));
    FAIL("t is not regular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Divergence);
  }
  CHECK(std::isfinite(majorant_regularity_constant(Majorant::power_log(0.5, 0.25))));
}

TEST_CASE("garsia norm closed forms") {
  for (int n : {1, 2, 4, 8}) {
    const auto g = garsia_norm(ComplexPolynomial::monomial(1.0, static_cast<std::size_t>(n)));
    CHECK(g.value == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(g.value <= 1.0 + 1e-9);
  }
  CHECK(garsia_norm(ComplexPolynomial::constant(2.5)).value < 1e-10);
  const ComplexPolynomial f{1.0, 0.5, cplx(0, 0.2)};
  CHECK(garsia_norm(f).value == gtn_eval(GtnSpec::garsia(), DiskFunction::polynomial(f)).value);
}

TEST_CASE("garsia norm against a brute polar grid") {
  const ComplexPolynomial f{2.0, cplx(0.3, 0.4), 0.0, -0.5};
  const auto sq = [&](double t) { return std::norm(f(std::polar(1.0, t))); };
  const double grid = oracle::polar_grid_max(
      [&](cplx z) { return std::sqrt(std::max(0.0, oracle::poisson_trapezoid(sq, z, 4096) - std::norm(f(z)))); }, 50,
      96, 0.98);
  const double value = garsia_norm(f).value;
  CHECK(value >= grid - 1e-9);
  CHECK(value <= grid * 1.01);
}

TEST_CASE("ntilde1 closed forms") {
  for (int n = 1; n <= 8; ++n) {
    const auto e = gtn_eval(GtnSpec::ntilde1(), DiskFunction::polynomial(ComplexPolynomial::monomial(1.0, n)));
    CHECK(e.value == doctest::Approx(n).epsilon(1e-6));
    const auto b = gtn_eval(GtnSpec::ntilde1(), DiskFunction::blaschke(monomial_inner(n)));
    CHECK(b.value == doctest::Approx(n).epsilon(1e-6));
  }
  CHECK(gtn_eval(GtnSpec::ntilde1(), DiskFunction::polynomial(ComplexPolynomial::constant(1e-4))).value < 1e-12);
}

TEST_CASE("ntilde1 of a Blaschke product is the boundary sup of its derivative") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const auto b = random_inner(rng, 4);
    double want = 0.0;
    for (int m = 0; m < 1 << 15; ++m)
      want = std::max(want, boundary_derivative_modulus(b, 2 * oracle::kPi * m / (1 << 15)));
    const auto e = gtn_eval(GtnSpec::ntilde1(), DiskFunction::blaschke(b));
    CHECK(e.value == doctest::Approx(want).epsilon(1e-4));
  }
}

TEST_CASE("s functional") {
  for (int n : {1, 3, 6}) {
    const auto s = s_functional(GtnSpec::ntilde1(), DiskFunction{}, monomial_inner(n));
    CHECK(s.value == doctest::Approx(n).epsilon(1e-6));
  }
  CHECK(s_functional(GtnSpec::ntilde1(), DiskFunction{}, BlaschkeProduct{}).value == 0.0);
  std::mt19937_64 rng(32);
  for (const auto& spec : kSpecs) {
    const auto theta = random_inner(rng, 3);
    const auto n = gtn_eval(spec, DiskFunction::blaschke(theta));
    const auto s = s_functional(spec, DiskFunction{}, theta);
    CHECK(n.value == doctest::Approx(s.value).epsilon(1e-6));
  }
}

TEST_CASE("lipschitz seminorms") {
  const auto id = [](cplx z) { return z; };
  CHECK(lipschitz_seminorm(id, Majorant::power(1.0)) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(lipschitz_seminorm([](cplx) { return cplx(3.0); }, Majorant::power(0.5)) == 0.0);
  // Brute-force values of the boundary Lambda^{1/2} seminorm of z^n.
  const double brute[] = {2.4250435, 3.4110164, 4.8174787};
  int i = 0;
  for (int n : {4, 8, 16}) {
    const auto f = [n](cplx z) { return std::pow(z, n); };
    const double v = lipschitz_seminorm(f, Majorant::power(0.5));
    CHECK(v <= brute[i] * (1.0 + 1e-6));
    CHECK(v >= brute[i] * 0.999);
    CHECK(std::abs(v / (std::sqrt(n) * std::sqrt(2.0)) - 1.0) <= 0.15);
    CHECK(v >= oracle::boundary_lipschitz(f, 0.5, 512) * (1.0 - 1e-12));
    ++i;
  }
}

TEST_CASE("m_omega norm") {
  const auto w = Majorant::power(0.5);
  CHECK(m_omega_norm(DiskFunction::polynomial(ComplexPolynomial::constant(2.0)), w) < 1e-10);
  const auto f = DiskFunction::polynomial(ComplexPolynomial{0.0, 1.0});
  const double v = m_omega_norm(f, w);
  CHECK(std::isfinite(v));
  DiskSupremumOptions fine;
  fine.base_angular = 32;
  fine.angular_cap = 16384;
  CHECK(m_omega_norm(f, w, fine) == doctest::Approx(v).epsilon(1e-2));
  CHECK(m_omega_norm(f.scaled(3.7), w) == doctest::Approx(3.7 * v).epsilon(1e-9));
  try {
    m_omega_norm(f, Majorant::power(1.0));
    FAIL("t is not regular");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NonRegularMajorant);
  }
}

TEST_CASE("higher-order lipschitz norm") {
  const auto z2 = DiskFunction::polynomial(ComplexPolynomial::monomial(1.0, 2));
  const auto half = DiskFunction::polynomial(ComplexPolynomial::monomial(0.5, 2));
  CHECK(higher_lipschitz_norm(z2, 1.5) == doctest::Approx(2.0 * higher_lipschitz_norm(half, 1.5)).epsilon(1e-12));
  CHECK(higher_lipschitz_norm(DiskFunction::polynomial(ComplexPolynomial::constant(4.0)), 1.5) == 0.0);
  CHECK_THROWS_AS(higher_lipschitz_norm(z2, 2.0), Error);

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const int ns[] = {4, 8, 16, 32};
  for (int n : ns) {
    const double x = std::log(n);
    const double y = std::log(higher_lipschitz_norm(DiskFunction::polynomial(ComplexPolynomial::monomial(1.0, n)), 1.5));
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  const double slope = (4 * sxy - sx * sy) / (4 * sxx - sx * sx);
  CHECK(std::abs(slope - 1.5) <= 0.15);
}

TEST_CASE("psi axioms") {
  std::mt19937_64 rng(33);
  const auto one = DiskFunction::polynomial(ComplexPolynomial::constant(1.0));
  const GtnSpec all[] = {GtnSpec::garsia(), GtnSpec::ntilde1(), GtnSpec::m_omega(Majorant::power(0.5)),
                         GtnSpec::garsia_omega(Majorant::power(0.5))};
  for (const auto& spec : all) {
    const PsiEvaluator psi_one(spec, one);
    for (int k = 0; k < 100; ++k) CHECK(std::abs(psi_one(oracle::random_in_disk(rng, 1.0)) - 1.0) <= 1e-10);

    const auto f = DiskFunction{zero_free_on_circle(rng, 3), random_inner(rng, 2)};
    const PsiEvaluator psi(spec, f);
    std::uniform_real_distribution<double> lam(0.1, 10.0);
    for (int k = 0; k < 10; ++k) {
      const double l = lam(rng);
      const PsiEvaluator scaled(spec, f.scaled(l));
      for (int j = 0; j < 5; ++j) {
        const cplx z = oracle::random_in_disk(rng, 1.0);
        CHECK(scaled(z) == doctest::Approx(std::pow(l, spec.p) * psi(z)).epsilon(1e-8));
      }
    }
    for (int k = 0; k < 5; ++k) {
      const auto g = DiskFunction{zero_free_on_circle(rng, 4), random_inner(rng, 3)};
      const PsiEvaluator pg(spec, g);
      for (int j = 0; j < 100; ++j) {
        const cplx z = oracle::random_in_disk(rng, 1.0);
        CHECK(pg(z) >= std::pow(std::abs(g(z)), spec.p) - 1e-9 - pg.error());
      }
    }
  }
}

TEST_CASE("norm evaluators are 1-homogeneous") {
  std::mt19937_64 rng(34);
  for (const auto& spec : kSpecs) {
    const auto f = DiskFunction{zero_free_on_circle(rng, 3), random_inner(rng, 2)};
    const double v = gtn_eval(spec, f).value;
    for (double l : {0.3, 2.0, 7.5}) CHECK(gtn_eval(spec, f.scaled(l)).value == doctest::Approx(l * v).epsilon(1e-8));
  }
}

TEST_CASE("division, sandwich and power inequalities on random pairs") {
  std::mt19937_64 rng(35);
  for (int trial = 0; trial < 6; ++trial) {
    const auto h = DiskFunction::polynomial(zero_free_on_circle(rng, 3));
    const auto theta = random_inner(rng, 5);
    for (const auto& spec : kSpecs) {
      const auto nh = gtn_eval(spec, h);
      const auto nht = gtn_eval(spec, DiskFunction{h.outer, theta});
      const auto s = s_functional(spec, h, theta);
      const double tol = 1e-9 + nh.refinement_error + nht.refinement_error + s.refinement_error;
      CHECK(nht.value >= nh.value - tol);
      CHECK(nht.value >= s.value - tol);
      CHECK(nht.value <= nh.value + s.value + tol);

      const int n = 3;
      const auto s1 = s_functional(spec, DiskFunction{}, theta);
      const auto sn = s_functional(spec, DiskFunction{}, power(theta, n));
      CHECK(sn.value <= std::pow(n, 1.0 / spec.p) * s1.value + 1e-9 + sn.refinement_error);
    }
  }
}

TEST_CASE("disk supremum locates interior and boundary maxima") {
  const auto interior = disk_supremum([](cplx z) { return -std::norm(z - cplx(0.3, -0.2)); });
  CHECK(interior.value == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(std::abs(interior.attained_at - cplx(0.3, -0.2)) < 1e-4);
  // (1 - r^5) / (1 - r) approaches 5 only as r -> 1; extrapolation closes the gap.
  const auto edge = disk_supremum([](cplx z) {
    const double r = std::abs(z);
    return r >= 1.0 ? 5.0 : (1 - std::pow(r, 5)) / (1 - r);
  });
  CHECK(edge.value == doctest::Approx(5.0).epsilon(1e-6));
}

#include <doctest.h>

#include <random>

#include "garsia_abc/blaschke.hpp"
#include "garsia_abc/error.hpp"
#include "oracles.hpp"

using namespace gabc;
using oracle::cplx;
using Zero = BlaschkeProduct::Zero;

namespace {

BlaschkeProduct make(std::initializer_list<Zero> zs) { return BlaschkeProduct::from_zeros(std::vector<Zero>(zs)); }

std::vector<std::pair<cplx, int>> raw(const BlaschkeProduct& b) {
  std::vector<std::pair<cplx, int>> out;
  for (const auto& z : b.zeros()) out.emplace_back(z.location, z.multiplicity);
  return out;
}

BlaschkeProduct random_blaschke(std::mt19937_64& rng, int max_zeros, double radius) {
  std::uniform_int_distribution<int> count(1, max_zeros), mult(1, 3);
  std::vector<Zero> zs;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) zs.push_back({oracle::random_in_disk(rng, radius), mult(rng)});
  return BlaschkeProduct::from_zeros(zs);
}

}  // namespace

TEST_CASE("construction from zeros") {
  const auto z = make({{0.0, 1}});
  CHECK(std::abs(evaluate(z, cplx(0.3, 0.4)) - cplx(0.3, 0.4)) < 1e-15);
  CHECK(std::abs(evaluate(make({{0.5, 1}}), 0.0) - (-0.5)) < 1e-15);
  CHECK(zero_count(make({{0.0, 3}})) == 3);
  CHECK_THROWS_AS(make({{1.0 - 1e-5, 1}}), Error);
  CHECK_THROWS_AS(make({{1.5, 1}}), Error);
  try {
    make({{cplx(0, 1.0), 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BoundaryZero);
  }
  try {
    make({{2.0, 1}});
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OutsideDisk);
  }
}

TEST_CASE("construction from polynomials classifies roots by modulus") {
  const auto b1 = from_polynomial(ComplexPolynomial{0.0, -2.0, 1.0});
  REQUIRE(b1.zeros().size() == 1);
  CHECK(std::abs(b1.zeros()[0].location) < 1e-12);

  const auto b2 = from_polynomial(ComplexPolynomial{0.0, 0.003});
  CHECK(zero_count(b2) == 1);

  const ComplexPolynomial p(oracle::from_roots(1.0, {0.5, 0.5, 3.0}));
  const auto b3 = from_polynomial(p);
  REQUIRE(b3.zeros().size() == 1);
  CHECK(b3.zeros()[0].multiplicity == 2);
  CHECK(std::abs(b3.zeros()[0].location - 0.5) < 1e-7);

  try {
    from_polynomial(ComplexPolynomial{-1.0, 1.0});
    FAIL("expected an annulus root to be rejected");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndeterminateBoundaryZero);
  }
}

TEST_CASE("evaluation against the direct product") {
  const auto z3 = make({{0.0, 3}});
  const cplx w = evaluate(z3, std::polar(1.0, oracle::kPi / 3));
  CHECK(std::abs(w - std::polar(1.0, oracle::kPi)) < 1e-14);
  CHECK(std::abs(evaluate(make({{0.5, 1}}), 0.5)) < 1e-16);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_blaschke(rng, 6, 0.95);
    for (int k = 0; k < 10; ++k) {
      const cplx z = oracle::random_in_disk(rng, 1.0);
      CHECK(std::abs(evaluate(b, z) - oracle::blaschke_direct(raw(b), z)) < 1e-12);
    }
  }
}

TEST_CASE("unimodular on the circle, contractive inside") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = random_blaschke(rng, 10, 0.9);
    for (int m = 0; m < 1024; ++m) CHECK(std::abs(std::abs(evaluate(b, std::polar(1.0, 2 * oracle::kPi * m / 1024))) - 1.0) < 1e-10);
    for (int k = 0; k < 200; ++k) CHECK(std::abs(evaluate(b, oracle::random_in_disk(rng, 0.999))) < 1.0);
  }
}

TEST_CASE("boundary derivative") {
  const auto zn = make({{0.0, 5}});
  for (double t : {0.0, 1.0, 2.5}) CHECK(boundary_derivative_modulus(zn, t) == doctest::Approx(5.0));
  CHECK(std::abs(boundary_derivative(make({{0.0, 1}}), 0.7)) == doctest::Approx(1.0));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const auto b = random_blaschke(rng, 5, 0.8);
    for (int k = 0; k < 10; ++k) {
      const double t = 2 * oracle::kPi * k / 10.0;
      const cplx zeta = std::polar(1.0, t);
      // d/dt B(e^{it}) = i zeta B'(zeta)
      const double h = 1e-6;
      const cplx dt = (oracle::blaschke_direct(raw(b), std::polar(1.0, t + h)) -
                       oracle::blaschke_direct(raw(b), std::polar(1.0, t - h))) /
                      (2 * h);
      const cplx want = dt / (cplx(0, 1) * zeta);
      CHECK(std::abs(boundary_derivative(b, t) - want) < 1e-6 * (1.0 + std::abs(want)));
      CHECK(boundary_derivative_modulus(b, t) == doctest::Approx(std::abs(want)).epsilon(1e-6));
    }
  }
}

TEST_CASE("derivative inside the disk, including at zeros") {
  std::mt19937_64 rng(14);
  const auto b = random_blaschke(rng, 4, 0.7);
  for (int k = 0; k < 10; ++k) {
    const cplx z = oracle::random_in_disk(rng, 0.9);
    const cplx fd = oracle::central_difference([&](cplx w) { return oracle::blaschke_direct(raw(b), w); }, z, 1e-6);
    CHECK(std::abs(derivative_at(b, z) - fd) < 1e-6 * (1.0 + std::abs(fd)));
  }
  const auto simple = make({{0.3, 1}});
  // B'(a) = 1 / (1 - |a|^2) for a simple zero.
  CHECK(std::abs(derivative_at(simple, 0.3) - 1.0 / (1.0 - 0.09)) < 1e-12);
}

TEST_CASE("radical, lcm, product, divisibility") {
  const auto z3 = make({{0.0, 3}});
  const auto rz = radical(z3);
  CHECK(zero_count(rz) == 1);
  CHECK(zero_count(radical(rz)) == 1);

  const auto two = make({{0.2, 2}, {-0.4, 5}});
  CHECK(zero_count(two) == 7);
  CHECK(zero_count(radical(two)) == 2);

  const auto z2 = make({{0.0, 2}});
  const BlaschkeProduct pair[] = {z2, z3};
  CHECK(zero_count(lcm(pair)) == 3);

  const auto a = make({{0.5, 1}});
  const BlaschkeProduct disjoint[] = {make({{0.0, 1}}), a};
  CHECK(zero_count(lcm(disjoint)) == 2);

  const BlaschkeProduct family[] = {BlaschkeProduct{}, make({{0.0, 1}}), z2, BlaschkeProduct{}};
  const auto big = lcm(family);
  REQUIRE(big.zeros().size() == 1);
  CHECK(big.zeros()[0].multiplicity == 2);

  CHECK(zero_count(product(make({{0.0, 1}}), make({{0.0, 1}}))) == 2);
  CHECK(zero_count(product(two, BlaschkeProduct{})) == 7);
  CHECK(zero_count(power(two, 3)) == 21);

  CHECK(divides(z2, z3));
  CHECK_FALSE(divides(z3, z2));
  for (const auto& b : family) CHECK(divides(b, big));
}

TEST_CASE("lcm refuses ambiguous clusters") {
  const BlaschkeProduct close[] = {make({{0.3, 1}}), make({{0.3 + 8e-7, 1}})};
  CHECK_THROWS_AS(lcm(close, 1e-6), Error);
}

TEST_CASE("algebraic laws on random products") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_blaschke(rng, 6, 0.9), c = random_blaschke(rng, 6, 0.9), d = random_blaschke(rng, 6, 0.9);
    CHECK(divides(radical(b), b));
    const BlaschkeProduct bc[] = {b, c}, cb[] = {c, b};
    const auto l = lcm(bc);
    CHECK(divides(b, l));
    CHECK(divides(c, l));
    CHECK(zero_count(l) <= zero_count(b) + zero_count(c));
    CHECK(zero_count(lcm(cb)) == zero_count(l));
    const BlaschkeProduct lc_d[] = {l, d};
    const BlaschkeProduct cd[] = {c, d};
    const BlaschkeProduct b_lcd[] = {b, lcm(cd)};
    CHECK(zero_count(lcm(lc_d)) == zero_count(lcm(b_lcd)));
    CHECK(zero_count(product(b, c)) == zero_count(b) + zero_count(c));
  }
}

TEST_CASE("mean of |B'| on the circle counts zeros") {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    std::uniform_int_distribution<int> count(1, 10);
    std::vector<Zero> zs;
    const int k = count(rng);
    for (int i = 0; i < k; ++i) zs.push_back({oracle::random_in_disk(rng, 0.9), 1});
    const auto b = BlaschkeProduct::from_zeros(zs);
    const double mean = oracle::trapezoid_mean([&](double t) { return boundary_derivative_modulus(b, t); }, 4096);
    CHECK(mean == doctest::Approx(zero_count(b)).epsilon(1e-6));
  }
}

#include <doctest.h>

#include <cstdlib>
#include <functional>
#include <limits>

#include "garsia_abc/error.hpp"
#include "garsia_abc/io.hpp"

using namespace gabc;
using io::Json;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("polynomial and Blaschke round trips") {
  const ComplexPolynomial p{1.0, cplx(0.5, -2.0), 0.0, cplx(0.0, 1e-3)};
  const auto j = io::to_json(p);
  CHECK(j.dump() == "[[1.0,0.0],[0.5,-2.0],[0.0,0.0],[0.0,0.001]]");
  const auto q = io::polynomial_from_json(j);
  CHECK((p - q).is_zero());
  CHECK(io::polynomial_from_json(Json::array()).is_zero());

  const BlaschkeProduct::Zero zs[] = {{cplx(0.2, 0.1), 2}, {-0.5, 1}};
  const auto b = BlaschkeProduct::from_zeros(zs);
  const auto bj = io::to_json(b);
  CHECK(bj[0]["mult"] == 2);
  const auto b2 = io::blaschke_from_json(bj);
  CHECK(zero_count(b2) == 3);
  CHECK(code_of([] { io::polynomial_from_json(Json::parse("[[1]]")); }) == ErrorCode::ParseError);
}

TEST_CASE("config overlay and validation") {
  RunConfig base;
  const auto c = io::config_from_json(Json::parse(R"({"ratio_cap": 6, "seed": 7, "disk_levels": 10})"), base);
  CHECK(c.ratio_cap == 6.0);
  CHECK(c.seed == 7);
  CHECK(c.disk.levels == 10);
  CHECK(c.boundary_margin == base.boundary_margin);
  const auto back = io::config_from_json(io::to_json(c));
  CHECK(io::to_json(back) == io::to_json(c));
  CHECK(code_of([] { io::config_from_json(Json::parse(R"({"bogus": 1})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::config_from_json(Json::parse(R"({"cluster_tolerance": -1})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::config_from_json(Json::parse(R"({"seed": "x"})")); }) == ErrorCode::ParseError);
}

TEST_CASE("seed override from the environment") {
  ::setenv("GARSIA_ABC_SEED", "123", 1);
  CHECK(io::apply_environment({}).seed == 123);
  ::setenv("GARSIA_ABC_SEED", "12x", 1);
  CHECK(io::apply_environment({}).seed == RunConfig{}.seed);
  ::unsetenv("GARSIA_ABC_SEED");
}

TEST_CASE("instance files") {
  const ComplexPolynomial fs[] = {ComplexPolynomial::constant(1.0), ComplexPolynomial{0.0, 0.01}};
  const auto text = io::emit_instance(fs, RunConfig{});
  const auto parsed = io::parse_instance(text);
  CHECK(parsed.n == 1);
  CHECK(parsed.functions.size() == 2);
  CHECK(parsed.config.has_value());
  CHECK(io::emit_instance(parsed.functions, io::config_from_json(*parsed.config)) == text);

  CHECK(code_of([] { io::parse_instance("{not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_instance(R"({"schema": 2, "functions": [[[1,0]]]})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_instance(R"({"functions": []})"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { io::parse_instance(R"({"n": 1})"); }) == ErrorCode::ParseError);
}

TEST_CASE("single-function inputs") {
  const auto f = io::parse_single_function(R"({"function": [[0,0],[1,0]]})");
  CHECK(f.outer.degree() == 1);
  const auto g = io::parse_single_function(R"({"blaschke": [{"zero": [0.5, 0], "mult": 2}]})");
  CHECK(zero_count(g.inner) == 2);
  CHECK(g.outer.degree() == 0);
  CHECK(code_of([] { io::parse_single_function(R"({"functions": []})"); }) == ErrorCode::ParseError);
}

TEST_CASE("report serialization") {
  VerificationReport r;
  r.theorem = Theorem::theorem_c;
  r.hypotheses["h"] = {true, std::numeric_limits<double>::infinity()};
  r.quantities["kappa"] = 0.0;
  r.slack = 0.5;
  r.settle();
  const auto j = io::to_json(r, 99);
  CHECK(j["schema"] == 1);
  CHECK(j["verdict"] == "holds");
  CHECK(j["theorem"] == "theorem-c");
  CHECK(j["hypotheses"]["h"]["value"] == "inf");
  CHECK(j["seed"] == 99);
  CHECK(io::dump(j).back() == '\n');
}

TEST_CASE("sweep csv") {
  GrowthReport g;
  g.rows.push_back({4, 2.0, 1.0, 2.0});
  CHECK(io::sweep_csv(g) == "n,lhs,rhs,ratio,slope\n4,2,1,2,\n");
  g.slope = 0.5;
  CHECK(io::sweep_csv(g).find("slope,,,,0.5\n") != std::string::npos);
}

TEST_CASE("space and majorant flags") {
  CHECK(io::parse_space("garsia").kind == io::NormSpace::Kind::garsia);
  CHECK(io::parse_space("ntilde1").is_gtn());
  const auto s = io::parse_space("garsia-omega:0.5");
  CHECK(s.alpha == 0.5);
  CHECK(s.gtn().weight == WeightKind::omega_gap);
  CHECK(io::parse_space("lip-high:1.5").alpha == 1.5);
  CHECK_FALSE(io::parse_space("lip:0.3").is_gtn());
  for (const char* bad : {"bmo", "garsia:0.5", "lip", "lip:1.5", "lip-high:0.5", "m-omega:abc"})
    CHECK(code_of([&] { io::parse_space(bad); }) == ErrorCode::InvalidArgument);
  CHECK(io::parse_majorant("0.25")(16.0) == doctest::Approx(2.0));
  CHECK(io::parse_majorant("log:0.5:0.2").kind() == Majorant::Kind::power_log);
}

TEST_CASE("norm dispatch") {
  const auto z4 = DiskFunction::polynomial(ComplexPolynomial::monomial(1.0, 4));
  CHECK(io::evaluate_norm(io::parse_space("ntilde1"), z4).value == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(io::evaluate_norm(io::parse_space("garsia"), DiskFunction::polynomial(ComplexPolynomial{0.0, 1.0})).value ==
        doctest::Approx(1.0).epsilon(1e-3));
  CHECK(io::evaluate_norm(io::parse_space("garsia"), DiskFunction::polynomial(ComplexPolynomial::constant(2.0))).value <
        1e-10);
  CHECK(io::evaluate_norm(io::parse_space("lip:1"), DiskFunction::polynomial(ComplexPolynomial{0.0, 1.0})).value ==
        doctest::Approx(1.0));
  CHECK(code_of([&] { io::evaluate_norm(io::parse_space("m-omega:1"), z4); }) == ErrorCode::NonRegularMajorant);
}

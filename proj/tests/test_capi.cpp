#include <doctest.h>

#include <cstring>
#include <string>

#include "garsia_abc/garsia_abc.h"

namespace {

struct Ctx {
  gabc_context* c = gabc_context_new();
  ~Ctx() { gabc_context_free(c); }
};

}  // namespace

TEST_CASE("context lifecycle and status names") {
  Ctx ctx;
  REQUIRE(ctx.c != nullptr);
  CHECK(std::string(gabc_status_name(GABC_OK)) == "ok");
  CHECK(std::string(gabc_status_name(GABC_E_EPS_TOO_LARGE)) == "eps_too_large");
  CHECK(gabc_context_set_seed(ctx.c, 42) == GABC_OK);
  CHECK(gabc_context_seed(ctx.c) == 42);
  CHECK(gabc_context_load_config(ctx.c, R"({"seed": 5})") == GABC_OK);
  CHECK(gabc_context_seed(ctx.c) == 5);
  CHECK(gabc_context_load_config(ctx.c, R"({"nope": 5})") == GABC_E_PARSE);
  CHECK(std::strlen(gabc_last_error(ctx.c)) > 0);
  CHECK(gabc_context_load_config(ctx.c, "{") == GABC_E_PARSE);
  CHECK(gabc_verify(nullptr, nullptr, "mason", nullptr, nullptr, nullptr) == GABC_E_INVALID_ARGUMENT);
}

TEST_CASE("sharpness example round trip") {
  Ctx ctx;
  REQUIRE(gabc_example_sharpness(ctx.c, 3, 0.01) == GABC_OK);
  const std::string text = gabc_output(ctx.c);
  gabc_instance* inst = nullptr;
  REQUIRE(gabc_instance_parse(ctx.c, text.c_str(), &inst) == GABC_OK);
  CHECK(gabc_instance_function_count(inst) == 4);
  gabc_verdict v = GABC_VIOLATED;
  CHECK(gabc_verify(ctx.c, inst, "theorem-c", nullptr, nullptr, &v) == GABC_OK);
  CHECK(v == GABC_HOLDS);
  CHECK(std::string(gabc_output(ctx.c)).find("\"verdict\": \"holds\"") != std::string::npos);
  CHECK(gabc_verify(ctx.c, inst, "main", "ntilde1", nullptr, &v) == GABC_OK);
  CHECK(v == GABC_HOLDS);
  CHECK(gabc_verify(ctx.c, inst, "main", nullptr, nullptr, &v) == GABC_E_INVALID_ARGUMENT);
  CHECK(gabc_verify(ctx.c, inst, "prop2", nullptr, "0.5", &v) == GABC_OK);
  CHECK(gabc_verify(ctx.c, inst, "prop2", nullptr, "1", &v) == GABC_E_NON_REGULAR_MAJORANT);
  CHECK(gabc_verify(ctx.c, inst, "bogus", nullptr, nullptr, &v) == GABC_E_INVALID_ARGUMENT);
  gabc_instance_free(inst);

  CHECK(gabc_example_sharpness(ctx.c, 2, 10.0) == GABC_E_EPS_TOO_LARGE);
}

TEST_CASE("instances from raw coefficients") {
  Ctx ctx;
  // a = 1, b = 1: Mason hypotheses fail (all constants).
  const size_t lengths[] = {1, 1};
  const double coeffs[] = {1.0, 0.0, 1.0, 0.0};
  gabc_instance* inst = nullptr;
  REQUIRE(gabc_instance_from_coefficients(ctx.c, 2, lengths, coeffs, &inst) == GABC_OK);
  gabc_verdict v = GABC_HOLDS;
  CHECK(gabc_verify(ctx.c, inst, "mason", nullptr, nullptr, &v) == GABC_OK);
  CHECK(v == GABC_HYPOTHESES_FAILED);
  gabc_instance_free(inst);

  // (z, -z): the sum vanishes.
  const size_t l2[] = {2, 2};
  const double c2[] = {0, 0, 1, 0, 0, 0, -1, 0};
  REQUIRE(gabc_instance_from_coefficients(ctx.c, 2, l2, c2, &inst) == GABC_OK);
  CHECK(gabc_verify(ctx.c, inst, "theorem-c", nullptr, nullptr, &v) == GABC_E_DEGENERATE_INPUT);
  gabc_instance_free(inst);
}

TEST_CASE("sweep, norm, limit and majorant entry points") {
  Ctx ctx;
  const int ns[] = {4, 8};
  REQUIRE(gabc_sweep_counterexample(ctx.c, 1.5, ns, 2, 0.01) == GABC_OK);
  CHECK(std::string(gabc_output(ctx.c)).rfind("n,lhs,rhs,ratio,slope\n", 0) == 0);

  REQUIRE(gabc_norm(ctx.c, "ntilde1", R"({"function": [[0,0],[0,0],[0,0],[0,0],[1,0]]})") == GABC_OK);
  CHECK(std::string(gabc_output(ctx.c)).find("\"value\": 4.0") != std::string::npos);
  CHECK(gabc_norm(ctx.c, "bmo", R"({"function": [[1,0]]})") == GABC_E_INVALID_ARGUMENT);

  const size_t lengths[] = {6, 1};
  double coeffs[14] = {};
  coeffs[10] = 1.0;  // z^5
  coeffs[12] = 1.0;  // 1
  gabc_instance* inst = nullptr;
  REQUIRE(gabc_instance_from_coefficients(ctx.c, 2, lengths, coeffs, &inst) == GABC_OK);
  const double radii[] = {2.0, 10.0};
  REQUIRE(gabc_mason_limit(ctx.c, inst, radii, 2) == GABC_OK);
  CHECK(std::string(gabc_output(ctx.c)).find("\"stabilized\": true") != std::string::npos);
  gabc_instance_free(inst);

  double c = 0.0;
  REQUIRE(gabc_majorant_constant(ctx.c, "0.5", &c) == GABC_OK);
  CHECK(c == doctest::Approx(4.0).epsilon(1e-6));
  CHECK(gabc_majorant_constant(ctx.c, "1", &c) == GABC_E_DIVERGENCE);
}

TEST_CASE("random examples are reproducible from the seed") {
  Ctx a, b;
  gabc_context_set_seed(a.c, 77);
  gabc_context_set_seed(b.c, 77);
  REQUIRE(gabc_example_random(a.c) == GABC_OK);
  REQUIRE(gabc_example_random(b.c) == GABC_OK);
  CHECK(std::string(gabc_output(a.c)) == gabc_output(b.c));
}

#include "garsia_abc/garsia_abc.h"

#include <exception>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "garsia_abc/error.hpp"
#include "garsia_abc/io.hpp"
#include "garsia_abc/verify.hpp"

using namespace gabc;

struct gabc_context {
  RunConfig config = io::apply_environment({});
  std::string last_error;
  std::string output;
};

struct gabc_instance {
  std::vector<ComplexPolynomial> functions;
  std::optional<int> n;
};

namespace {

gabc_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return GABC_E_INVALID_ARGUMENT;
    case ErrorCode::ParseError: return GABC_E_PARSE;
    case ErrorCode::DegenerateInput: return GABC_E_DEGENERATE_INPUT;
    case ErrorCode::BoundaryZero: return GABC_E_BOUNDARY_ZERO;
    case ErrorCode::OutsideDisk: return GABC_E_OUTSIDE_DISK;
    case ErrorCode::IndeterminateBoundaryZero: return GABC_E_INDETERMINATE_BOUNDARY_ZERO;
    case ErrorCode::PoleProximity: return GABC_E_POLE_PROXIMITY;
    case ErrorCode::AmbiguousCluster: return GABC_E_AMBIGUOUS_CLUSTER;
    case ErrorCode::NonConvergence:
    case ErrorCode::NoConvergence: return GABC_E_NON_CONVERGENCE;
    case ErrorCode::LogSingularity: return GABC_E_LOG_SINGULARITY;
    case ErrorCode::HypothesisViolated: return GABC_E_HYPOTHESIS_VIOLATED;
    case ErrorCode::Divergence: return GABC_E_DIVERGENCE;
    case ErrorCode::PsiAxiomViolation: return GABC_E_PSI_AXIOM_VIOLATION;
    case ErrorCode::NonRegularMajorant: return GABC_E_NON_REGULAR_MAJORANT;
    case ErrorCode::DivisibilityFailure: return GABC_E_DIVISIBILITY_FAILURE;
    case ErrorCode::SumMismatch: return GABC_E_SUM_MISMATCH;
    case ErrorCode::BoundaryRoot: return GABC_E_BOUNDARY_ROOT;
    case ErrorCode::EpsTooLarge: return GABC_E_EPS_TOO_LARGE;
  }
  return GABC_E_INTERNAL;
}

// Runs body, translating exceptions into a status and the context's error text.
template <class Body>
gabc_status guarded(gabc_context* ctx, Body&& body) {
  if (!ctx) return GABC_E_INVALID_ARGUMENT;
  ctx->last_error.clear();
  try {
    body();
    return GABC_OK;
  } catch (const Error& e) {
    ctx->last_error = e.what();
    return status_of(e.code());
  } catch (const nlohmann::json::exception& e) {
    ctx->last_error = e.what();
    return GABC_E_PARSE;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return GABC_E_INTERNAL;
  }
}

void require(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InvalidArgument, what);
}

void check_n(const gabc_instance& inst) {
  if (inst.n && *inst.n + 1 != static_cast<int>(inst.functions.size()))
    throw Error(ErrorCode::ParseError, "'n' does not match the number of functions");
}

gabc_verdict verdict_of(Verdict v) {
  switch (v) {
    case Verdict::holds: return GABC_HOLDS;
    case Verdict::violated: return GABC_VIOLATED;
    case Verdict::hypotheses_failed: return GABC_HYPOTHESES_FAILED;
  }
  return GABC_HYPOTHESES_FAILED;
}

VerificationReport run_theorem(const RunConfig& config, const gabc_instance& inst, Theorem theorem, const char* space,
                               const char* omega) {
  const auto& fs = inst.functions;
  switch (theorem) {
    case Theorem::mason:
      require(fs.size() == 2 || fs.size() == 3, "mason takes (a, b) or (a, b, c)");
      return verify_mason(fs[0], fs[1], fs.size() == 3 ? fs[2] : fs[0] + fs[1], config);
    case Theorem::theorem_b:
      check_n(inst);
      return verify_theorem_b(fs, config);
    default: break;
  }
  check_n(inst);
  const auto instance = assemble(fs);
  switch (theorem) {
    case Theorem::theorem_c: return verify_theorem_c(instance, config);
    case Theorem::main: {
      require(space != nullptr, "main theorem needs a space");
      const auto parsed = io::parse_space(space);
      if (parsed.kind == io::NormSpace::Kind::m_omega) {
        try {
          majorant_regularity_constant(Majorant::power(parsed.alpha));
        } catch (const Error& e) {
          if (e.code() == ErrorCode::Divergence)
            throw Error(ErrorCode::NonRegularMajorant, "omega is not a regular majorant");
          throw;
        }
      }
      return verify_main(instance, parsed.gtn(), config);
    }
    case Theorem::prop1: return verify_prop1(instance, config);
    case Theorem::prop2:
      require(omega != nullptr, "prop2 needs a majorant");
      return verify_prop2(instance, io::parse_majorant(omega), config);
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "unhandled theorem");
}

}  // namespace

extern "C" {

const char* gabc_status_name(gabc_status status) {
  switch (status) {
    case GABC_OK: return "ok";
    case GABC_E_INVALID_ARGUMENT: return "invalid_argument";
    case GABC_E_PARSE: return "parse_error";
    case GABC_E_DEGENERATE_INPUT: return "degenerate_input";
    case GABC_E_BOUNDARY_ZERO: return "boundary_zero";
    case GABC_E_OUTSIDE_DISK: return "outside_disk";
    case GABC_E_INDETERMINATE_BOUNDARY_ZERO: return "indeterminate_boundary_zero";
    case GABC_E_POLE_PROXIMITY: return "pole_proximity";
    case GABC_E_AMBIGUOUS_CLUSTER: return "ambiguous_cluster";
    case GABC_E_NON_CONVERGENCE: return "non_convergence";
    case GABC_E_LOG_SINGULARITY: return "log_singularity";
    case GABC_E_HYPOTHESIS_VIOLATED: return "hypothesis_violated";
    case GABC_E_DIVERGENCE: return "divergence";
    case GABC_E_PSI_AXIOM_VIOLATION: return "psi_axiom_violation";
    case GABC_E_NON_REGULAR_MAJORANT: return "non_regular_majorant";
    case GABC_E_DIVISIBILITY_FAILURE: return "divisibility_failure";
    case GABC_E_SUM_MISMATCH: return "sum_mismatch";
    case GABC_E_BOUNDARY_ROOT: return "boundary_root";
    case GABC_E_EPS_TOO_LARGE: return "eps_too_large";
    case GABC_E_INTERNAL: return "internal";
  }
  return "unknown";
}

gabc_context* gabc_context_new(void) {
  try {
    return new gabc_context;
  } catch (...) {
    return nullptr;
  }
}

void gabc_context_free(gabc_context* ctx) { delete ctx; }

gabc_status gabc_context_load_config(gabc_context* ctx, const char* json_text) {
  return guarded(ctx, [&] {
    require(json_text != nullptr, "config text is null");
    const auto j = io::Json::parse(json_text);
    ctx->config = io::apply_environment(io::config_from_json(j, ctx->config));
  });
}

gabc_status gabc_context_set_seed(gabc_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->config.seed = seed; });
}

uint64_t gabc_context_seed(const gabc_context* ctx) { return ctx ? ctx->config.seed : 0; }

const char* gabc_last_error(const gabc_context* ctx) { return ctx ? ctx->last_error.c_str() : "null context"; }

const char* gabc_output(const gabc_context* ctx) { return ctx ? ctx->output.c_str() : ""; }

gabc_status gabc_instance_parse(gabc_context* ctx, const char* json_text, gabc_instance** out) {
  return guarded(ctx, [&] {
    require(json_text != nullptr && out != nullptr, "null argument");
    auto file = io::parse_instance(json_text);
    if (file.config) ctx->config = io::apply_environment(io::config_from_json(*file.config, ctx->config));
    *out = new gabc_instance{std::move(file.functions), file.n};
  });
}

gabc_status gabc_instance_from_coefficients(gabc_context* ctx, size_t count, const size_t* lengths,
                                            const double* re_im, gabc_instance** out) {
  return guarded(ctx, [&] {
    require(lengths != nullptr && out != nullptr && (re_im != nullptr || count == 0), "null argument");
    auto inst = std::make_unique<gabc_instance>();
    std::size_t offset = 0;
    for (std::size_t k = 0; k < count; ++k) {
      std::vector<cplx> coeffs;
      for (std::size_t i = 0; i < lengths[k]; ++i, offset += 2) coeffs.emplace_back(re_im[offset], re_im[offset + 1]);
      inst->functions.emplace_back(std::move(coeffs));
    }
    *out = inst.release();
  });
}

size_t gabc_instance_function_count(const gabc_instance* inst) { return inst ? inst->functions.size() : 0; }

void gabc_instance_free(gabc_instance* inst) { delete inst; }

gabc_status gabc_verify(gabc_context* ctx, const gabc_instance* inst, const char* theorem, const char* space,
                        const char* omega, gabc_verdict* verdict) {
  return guarded(ctx, [&] {
    require(inst != nullptr && theorem != nullptr, "null argument");
    const auto which = parse_theorem(theorem);
    if (!which) throw Error(ErrorCode::InvalidArgument, std::string("unknown theorem '") + theorem + "'");
    const auto report = run_theorem(ctx->config, *inst, *which, space, omega);
    ctx->output = io::dump(io::to_json(report, ctx->config.seed));
    if (verdict) *verdict = verdict_of(report.verdict);
  });
}

gabc_status gabc_example_sharpness(gabc_context* ctx, int n, double eps) {
  return guarded(ctx, [&] {
    const auto fs = sharpness_family(n, eps, ctx->config);
    ctx->output = io::emit_instance(fs, ctx->config);
  });
}

gabc_status gabc_example_random(gabc_context* ctx) {
  return guarded(ctx, [&] {
    std::mt19937_64 rng(ctx->config.seed);
    const auto inst = random_instance(rng, 2, 5, 0.05, ctx->config);
    ctx->output = io::emit_instance(inst.given(), ctx->config);
  });
}

gabc_status gabc_sweep_counterexample(gabc_context* ctx, double alpha, const int* ns, size_t count, double eps) {
  return guarded(ctx, [&] {
    require(ns != nullptr || count == 0, "null argument");
    const auto report = counterexample_sweep(alpha, std::span<const int>(ns, count), eps, ctx->config);
    ctx->output = io::sweep_csv(report);
  });
}

gabc_status gabc_norm(gabc_context* ctx, const char* space, const char* function_json) {
  return guarded(ctx, [&] {
    require(space != nullptr && function_json != nullptr, "null argument");
    const auto parsed = io::parse_space(space);
    const auto f = io::parse_single_function(function_json, ctx->config);
    ctx->output = io::dump(io::to_json(io::evaluate_norm(parsed, f, ctx->config)));
  });
}

gabc_status gabc_mason_limit(gabc_context* ctx, const gabc_instance* inst, const double* radii, size_t count) {
  return guarded(ctx, [&] {
    require(inst != nullptr && (radii != nullptr || count == 0), "null argument");
    const auto& fs = inst->functions;
    require(fs.size() == 2 || fs.size() == 3, "limit experiment takes (a, b) or (a, b, c)");
    const auto c = fs.size() == 3 ? fs[2] : fs[0] + fs[1];
    const auto report = mason_limit_experiment(fs[0], fs[1], c, std::span<const double>(radii, count), ctx->config);
    ctx->output = io::dump(io::to_json(report, ctx->config.seed));
  });
}

gabc_status gabc_majorant_constant(gabc_context* ctx, const char* omega, double* out) {
  return guarded(ctx, [&] {
    require(omega != nullptr && out != nullptr, "null argument");
    *out = majorant_regularity_constant(io::parse_majorant(omega));
  });
}

}  // extern "C"

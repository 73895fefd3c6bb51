#ifndef GARSIA_ABC_H
#define GARSIA_ABC_H

#include <stddef.h>
#include <stdint.h>

#if defined(GABC_BUILDING)
#define GABC_API __attribute__((visibility("default")))
#else
#define GABC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status; details of the last failure are kept on the
   context and read back with gabc_last_error. Text results (reports, CSV,
   instance files) land in the context's output buffer, valid until the next
   call on the same context. A context is not thread safe; use one per thread. */

typedef enum gabc_status {
  GABC_OK = 0,
  GABC_E_INVALID_ARGUMENT,
  GABC_E_PARSE,
  GABC_E_DEGENERATE_INPUT,
  GABC_E_BOUNDARY_ZERO,
  GABC_E_OUTSIDE_DISK,
  GABC_E_INDETERMINATE_BOUNDARY_ZERO,
  GABC_E_POLE_PROXIMITY,
  GABC_E_AMBIGUOUS_CLUSTER,
  GABC_E_NON_CONVERGENCE,
  GABC_E_LOG_SINGULARITY,
  GABC_E_HYPOTHESIS_VIOLATED,
  GABC_E_DIVERGENCE,
  GABC_E_PSI_AXIOM_VIOLATION,
  GABC_E_NON_REGULAR_MAJORANT,
  GABC_E_DIVISIBILITY_FAILURE,
  GABC_E_SUM_MISMATCH,
  GABC_E_BOUNDARY_ROOT,
  GABC_E_EPS_TOO_LARGE,
  GABC_E_INTERNAL
} gabc_status;

/* Matches the CLI exit codes 0, 1, 2. */
typedef enum gabc_verdict {
  GABC_HOLDS = 0,
  GABC_VIOLATED = 1,
  GABC_HYPOTHESES_FAILED = 2
} gabc_verdict;

typedef struct gabc_context gabc_context;
typedef struct gabc_instance gabc_instance;

GABC_API const char* gabc_status_name(gabc_status status);

GABC_API gabc_context* gabc_context_new(void);
GABC_API void gabc_context_free(gabc_context* ctx);
/* Overlays a JSON config object onto the defaults, then applies the
   GARSIA_ABC_SEED environment override. */
GABC_API gabc_status gabc_context_load_config(gabc_context* ctx, const char* json_text);
GABC_API gabc_status gabc_context_set_seed(gabc_context* ctx, uint64_t seed);
GABC_API uint64_t gabc_context_seed(const gabc_context* ctx);
GABC_API const char* gabc_last_error(const gabc_context* ctx);
GABC_API const char* gabc_output(const gabc_context* ctx);

/* Instance JSON: {"schema": 1, "n": n, "functions": [[[re, im], ...], ...]}.
   A "config" member inside the file is applied to ctx. */
GABC_API gabc_status gabc_instance_parse(gabc_context* ctx, const char* json_text, gabc_instance** out);
/* count functions; function k has lengths[k] coefficients stored as
   interleaved re, im pairs, concatenated across functions. */
GABC_API gabc_status gabc_instance_from_coefficients(gabc_context* ctx, size_t count, const size_t* lengths,
                                                     const double* re_im, gabc_instance** out);
GABC_API size_t gabc_instance_function_count(const gabc_instance* inst);
GABC_API void gabc_instance_free(gabc_instance* inst);

/* theorem: mason | theorem-b | theorem-c | main | prop1 | prop2.
   space is required for main (GTN spaces), omega for prop2 ("0.5" or
   "log:A:E"); pass NULL otherwise. Output: report JSON. */
GABC_API gabc_status gabc_verify(gabc_context* ctx, const gabc_instance* inst, const char* theorem, const char* space,
                                 const char* omega, gabc_verdict* verdict);

/* Output: instance JSON for f_0 = 1, f_j = eps z^j / j!. */
GABC_API gabc_status gabc_example_sharpness(gabc_context* ctx, int n, double eps);
/* Output: a random instance drawn with the context seed. */
GABC_API gabc_status gabc_example_random(gabc_context* ctx);

/* Output: CSV with columns n, lhs, rhs, ratio, slope. */
GABC_API gabc_status gabc_sweep_counterexample(gabc_context* ctx, double alpha, const int* ns, size_t count, double eps);

/* space: garsia | garsia-omega:A | m-omega:A | ntilde1 | lip:A | lip-high:A.
   Output: {value, attained_at, refinement_error, converged}. */
GABC_API gabc_status gabc_norm(gabc_context* ctx, const char* space, const char* function_json);

/* inst holds (a, b) or (a, b, c). Output: limit report JSON. */
GABC_API gabc_status gabc_mason_limit(gabc_context* ctx, const gabc_instance* inst, const double* radii,
                                      size_t count);

GABC_API gabc_status gabc_majorant_constant(gabc_context* ctx, const char* omega, double* out);

#ifdef __cplusplus
}
#endif

#endif

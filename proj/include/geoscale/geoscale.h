#ifndef GEOSCALE_GEOSCALE_H
#define GEOSCALE_GEOSCALE_H

/*
 * C interface to the geoscale solver library.
 *
 * Conventions:
 *  - Functions return gs_status; GS_OK means success. On failure the
 *    thread-local message from gs_last_error() describes the problem.
 *  - Objects come back through out-parameters as opaque handles owned by
 *    the caller; release them with the matching *_free function.
 *  - Strings produced by the library (out_json parameters) are
 *    heap-allocated; release them with gs_string_free.
 *  - Rational numbers travel as strings, "p" or "p/q" with q > 0.
 *  - Structured results travel as JSON with a fixed field order, so
 *    identical calls produce byte-identical output.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GS_API __declspec(dllexport)
#elif defined(__GNUC__)
#define GS_API __attribute__((visibility("default")))
#else
#define GS_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gs_status {
  GS_OK = 0,
  GS_ERR_INVALID_ARGUMENT = 1, /* null pointer, bad handle, bad enum name */
  GS_ERR_PARSE = 2,            /* malformed JSON or number text */
  GS_ERR_DOMAIN = 3,           /* well-formed input violating a precondition */
  GS_ERR_INTERNAL = 4
} gs_status;

typedef struct gs_instance gs_instance;
typedef struct gs_trace gs_trace;

GS_API const char* gs_version(void);
GS_API const char* gs_status_name(gs_status status);

/* Message for the most recent failure on this thread; never NULL. */
GS_API const char* gs_last_error(void);

GS_API void gs_string_free(char* text);

/*
 * Instances.
 *
 * JSON shape: {"n": int, "vertices": ["0110", ...],
 *              "c": ["-3", ...], "start": int}
 * Vertices are bitstrings of length n (coordinate 1 first); objective
 * entries are integers (JSON numbers or decimal strings); start indexes
 * the vertex list.
 */
GS_API gs_status gs_instance_from_json(const char* text, gs_instance** out);

/* Chain instance: vertex i has its last i coordinates set, start at 0.
 * objective: "linear" (c_i = i), "pow2" (c_i = 2^i), or "alpha-pow"
 * (c_i = b^i with b = ceil(alpha); alpha required, "p/q"). */
GS_API gs_status gs_instance_simplex(int n, const char* objective,
                                     const char* alpha, gs_instance** out);

/* Random instance: m distinct vertices, integer objective entries in
 * [-cmax, cmax], random start. Deterministic in (n, m, seed, cmax). */
GS_API gs_status gs_instance_random(int n, uint64_t m, uint64_t seed,
                                    uint32_t cmax, gs_instance** out);

GS_API gs_status gs_instance_to_json(const gs_instance* instance, char** out_json);
GS_API int gs_instance_dimension(const gs_instance* instance);
GS_API int64_t gs_instance_vertex_count(const gs_instance* instance);
GS_API void gs_instance_free(gs_instance* instance);

/*
 * Solver.
 *
 * config_json fields, all optional:
 *   "variant":    "mra" (default) | "feasibility"
 *   "policy":     "max-ratio" (default) | "max-gain" | "min-gain" |
 *                 "lex" | "random"        (feasibility only)
 *   "seed":       uint64, for the random policy (default 0)
 *   "mu0":        rational string, must exceed |c|_inf
 *                 (default: smallest power of two that does)
 *   "alpha":      rational string > 1, the scale divisor (default 2)
 *   "early_stop": bool, stop once mu <= 1/2 and no improving vertex
 *                 exists (default false)
 *   "certify":    bool, after the loop keep augmenting to a certified
 *                 optimum (default true)
 *   "step_limit": positive integer; runs that exceed it abort with the
 *                 partial trace flagged (default scales with n, log mu0)
 * Unknown fields are rejected.
 */
GS_API gs_status gs_solve(const gs_instance* instance, const char* config_json,
                          gs_trace** out);

/* Trace JSON: {"config": ..., "steps": [{"i", "kind": "A"|"H", "mu",
 * "mu_after", "x", "obj"}, ...], "phases": [{"kind", "first", "last"},
 * ...], "summary": {"augment_count", "halve_count",
 * "certify_augment_count", "total", "final_vertex", "final_value",
 * "certified", "aborted"}}. */
GS_API gs_status gs_trace_to_json(const gs_trace* trace, char** out_json);

/* Audits a trace against an instance. Returns GS_OK with a JSON array of
 * violation strings (empty array when coherent); errors only when the
 * trace cannot belong to the instance. */
GS_API gs_status gs_trace_check(const gs_instance* instance,
                                const gs_trace* trace, char** out_json);

GS_API void gs_trace_free(gs_trace* trace);

/* {"index": i, "vertex": "0110", "value": "-3"}; exhaustive maximum,
 * value ties broken lexicographically. */
GS_API gs_status gs_brute_force(const gs_instance* instance, char** out_json);

/*
 * Analysis.
 */

/* {"alpha", "ceiling", "omega_strict", "omega_corrected",
 * "satisfied_t": [...], "note"}. The two counts tally integers t >= 1
 * with alpha*b*(1 - b^-t) > t, resp. > t*(b-1), where b = ceil(alpha);
 * they agree on (1, 2]. note records known discrepancies. */
GS_API gs_status gs_omega_report(const char* alpha, char** out_json);

/* definition: "strict" | "corrected". JSON array of {"lo", "hi",
 * "omega"}: half-open bands (lo, hi] partitioning (1, alpha_max] on
 * which the count is constant, with exact rational endpoints. */
GS_API gs_status gs_omega_bands(const char* definition, const char* alpha_max,
                                char** out_json);

/* Least k with mu0 * alpha^-k below the halt threshold: below 1/n for
 * mode "literal", at most 1/2 for mode "early-stop". */
GS_API gs_status gs_predicted_halvings(const char* mu0, const char* alpha,
                                       int n, const char* mode, int64_t* out);

/* Runs one worst-case family at dimension n and compares closed-form
 * step counts against the engine. theorem: "2.1" (unit-step family,
 * best-ratio engine), "3.1" (power-of-two objective, max-gain),
 * "4.1" (alpha in (1,2], required), "4.4" (alpha fixed at 4/3).
 * alpha may be NULL except for "4.1". Report JSON: {"theorem", "n",
 * "variant", "policy", "alpha", "mu0", "predicted": {...},
 * "observed": {...}, "match", "notes"}. */
GS_API gs_status gs_verify_theorem(const char* theorem, int n,
                                   const char* alpha, char** out_json);

/* Largest single-step index advance on the alpha family at dimension n.
 * policy: selection rule name; seed feeds the random policy. */
GS_API gs_status gs_max_jump(int n, const char* alpha, const char* policy,
                             uint64_t seed, int* out);

/* Cartesian sweep over alphas ("4/3,3/2") and dimensions ("6..12,18").
 * Rows computed in parallel, returned sorted by (alpha, n) as a JSON
 * array of verify-style reports plus "max_jump" and "omega_corrected".
 * Predictions use the corrected count, so alpha > 2 is allowed. */
GS_API gs_status gs_sweep(const char* alphas, const char* ns,
                          const char* policy, uint64_t seed, char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* GEOSCALE_GEOSCALE_H */

#ifndef BARNES_H
#define BARNES_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BarnesStatus {
  BARNES_STATUS_OK = 0,
  BARNES_STATUS_NULL_POINTER = 1,
  BARNES_STATUS_INVALID_UTF8 = 2,
  BARNES_STATUS_INVALID_ARGUMENT = 3,
  BARNES_STATUS_DOMAIN_ERROR = 4,
  BARNES_STATUS_POLE = 5,
  BARNES_STATUS_POLE_AT_ONE = 6,
  BARNES_STATUS_NON_CONVERGENCE = 7,
  BARNES_STATUS_INSUFFICIENT_DECAY = 8,
  BARNES_STATUS_PATH_CROSSES_POLE = 9,
  BARNES_STATUS_ZERO_FACTOR = 10,
  /**
   * verify ran and at least one identity failed
   */
  BARNES_STATUS_IDENTITY_FAILURE = 11,
  BARNES_STATUS_PANIC = 12,
} BarnesStatus;

/**
 * Opaque evaluation context: a fixed working precision.
 */
typedef struct BarnesContext BarnesContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * New context for `digits` decimal digits (10 to 5000). Returns NULL on
 * an out-of-range request.
 */
struct BarnesContext *barnes_context_new(uint32_t digits);

/**
 * # Safety
 * `ctx` must come from [`barnes_context_new`] and not be used afterwards.
 */
void barnes_context_free(struct BarnesContext *ctx);

/**
 * # Safety
 * `ctx` must be a live context or NULL.
 */
uint32_t barnes_context_digits(const struct BarnesContext *ctx);

/**
 * Evaluate a named function as the `eval` subcommand does and return its
 * JSON record in `*out_json`.
 *
 * # Safety
 * `function` and each of the `nargs` entries of `args` must be NUL-terminated
 * strings; `method` may be NULL; `out_json` must be writable.
 */
enum BarnesStatus barnes_eval(const struct BarnesContext *ctx,
                              const char *function,
                              const char *const *args,
                              size_t nargs,
                              const char *method,
                              char **out_json);

/**
 * log G(re + i·im) in double precision. When G vanishes, `*out_is_zero`
 * is set and the outputs are −∞ and 0.
 *
 * # Safety
 * The three output pointers must be writable.
 */
enum BarnesStatus barnes_log_g(const struct BarnesContext *ctx,
                               double re,
                               double im,
                               double *out_re,
                               double *out_im,
                               bool *out_is_zero);

/**
 * log A by the named method (NULL selects odd-zeta-series) in double
 * precision.
 *
 * # Safety
 * `method` must be NULL or a NUL-terminated string; `out` must be writable.
 */
enum BarnesStatus barnes_log_glaisher(const struct BarnesContext *ctx,
                                      const char *method,
                                      double *out);

/**
 * Run an identity group ("all" or a group key). A NaN tolerance selects
 * the default. The JSON report array goes to `*out_json` and the number of
 * failures to `*out_failures`; the status is `BARNES_STATUS_IDENTITY_FAILURE`
 * when that number is nonzero.
 *
 * # Safety
 * `selection` must be a NUL-terminated string; both outputs must be writable.
 */
enum BarnesStatus barnes_verify(const struct BarnesContext *ctx,
                                const char *selection,
                                double tolerance_log10,
                                char **out_json,
                                size_t *out_failures);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library, freed once.
 */
void barnes_string_free(char *s);

/**
 * Message for the last failed call on this thread, or NULL. The pointer
 * stays valid until the next library call on the same thread.
 */
const char *barnes_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BARNES_H */

#ifndef CROSSCYCLE_H
#define CROSSCYCLE_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; the nonzero values match the CLI exit codes.
 */
typedef enum CcStatus {
  CC_STATUS_OK = 0,
  /**
   * Panic inside the library.
   */
  CC_STATUS_INTERNAL = 1,
  /**
   * Bad argument, configuration or parameters.
   */
  CC_STATUS_CONFIG = 2,
  /**
   * Degenerate or non-isolated crossing system.
   */
  CC_STATUS_SOLVER = 3,
  CC_STATUS_MISMATCH = 4,
  CC_STATUS_VERIFICATION = 5,
} CcStatus;

/**
 * Solutions of the crossing system, sorted by `x`.
 */
typedef struct CcSolutions CcSolutions;

/**
 * A validated piecewise system with its solver and verifier settings.
 */
typedef struct CcSystem CcSystem;

typedef struct CcSolution {
  double x;
  double y;
  double residual_pl;
  double residual_pi;
  double jacobian_det;
  bool simple;
  size_t multiplicity;
} CcSolution;

typedef struct CcVerification {
  bool verified;
  bool orientation_consistent;
  double closure_residual;
  double h_drift;
  double region_violation;
  /**
   * Bounding-box diameter of the integrated cycle.
   */
  double diameter;
} CcVerification;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message describing the last failure on this thread, or null. The string
 * stays valid until the next failing call on the same thread.
 */
const char *cc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *cc_version(void);

/**
 * Creates a system from a registry example id such as `"N32"`.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `out` must be writable.
 */
enum CcStatus cc_system_from_example(const char *id, struct CcSystem **out);

/**
 * Creates a system from a JSON configuration document.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum CcStatus cc_system_from_json(const char *json, struct CcSystem **out);

/**
 * # Safety
 * `sys` must come from a `cc_system_*` constructor, or be null.
 */
void cc_system_free(struct CcSystem *sys);

/**
 * Solves the crossing system. A nonpositive `tol` keeps the configured
 * tolerance.
 *
 * # Safety
 * `sys` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_solve(const struct CcSystem *sys, double tol, struct CcSolutions **out);

/**
 * Number of solutions; zero for a null handle.
 *
 * # Safety
 * `sols` must be a live handle or null.
 */
size_t cc_solutions_len(const struct CcSolutions *sols);

/**
 * Copies solution `index` into `out`.
 *
 * # Safety
 * `sols` must be a live handle; `out` must be writable.
 */
enum CcStatus cc_solution_get(const struct CcSolutions *sols, size_t index, struct CcSolution *out);

/**
 * # Safety
 * `sols` must come from [`cc_solve`], or be null.
 */
void cc_solutions_free(struct CcSolutions *sols);

/**
 * Integrates the cycle through solution `index`. Fills `out` whenever the
 * integration ran; returns `CC_STATUS_VERIFICATION` if the cycle fails.
 *
 * # Safety
 * `sys` and `sols` must be live handles; `out` must be writable.
 */
enum CcStatus cc_verify(const struct CcSystem *sys,
                        const struct CcSolutions *sols,
                        size_t index,
                        struct CcVerification *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CROSSCYCLE_H */

#ifndef E8KIT_H
#define E8KIT_H

/* Generated by cbindgen from src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Number of coordinates of an e8 element.
 */
#define E8_DIM 248

/**
 * Result code of every exported function.
 */
typedef enum E8Status {
  E8_STATUS_OK = 0,
  E8_STATUS_NULL_POINTER = 1,
  E8_STATUS_INVALID_ARGUMENT = 2,
  E8_STATUS_PRECONDITION = 3,
  E8_STATUS_UNSUPPORTED = 4,
  E8_STATUS_INTERNAL = 5,
  E8_STATUS_CONFIG = 6,
  E8_STATUS_PANIC = 7,
} E8Status;

/**
 * An element of e8 with complex floating coordinates.
 */
typedef struct E8Element E8Element;

/**
 * A finished verification report.
 */
typedef struct E8Report E8Report;

/**
 * A reduction witness from a null-cone element to `1_-`.
 */
typedef struct E8Witness E8Witness;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failure on this thread; empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *e8_last_error(void);

/**
 * Builds an element from `len` = 248 real and imaginary parts.
 *
 * # Safety
 * `re` and `im` must point to `len` readable doubles; `out` must be writable.
 */
enum E8Status e8_element_new(const double *re,
                             const double *im,
                             size_t len,
                             struct E8Element **out);

/**
 * The `k`-th coordinate basis vector; 245, 246, 247 are `1~`, `1^-`, `1_-`.
 *
 * # Safety
 * `out` must be writable.
 */
enum E8Status e8_element_basis(size_t k, struct E8Element **out);

/**
 * Copies the coordinates into `re` and `im`, each of length `len` = 248.
 *
 * # Safety
 * `x` must be a live handle; `re` and `im` must point to `len` writable doubles.
 */
enum E8Status e8_element_coords(const struct E8Element *x, double *re, double *im, size_t len);

/**
 * `out = [a, b]`.
 *
 * # Safety
 * `a` and `b` must be live handles; `out` must be writable.
 */
enum E8Status e8_element_bracket(const struct E8Element *a,
                                 const struct E8Element *b,
                                 struct E8Element **out);

/**
 * `out = sigma'4(x)`, or its `power`-th iterate (`power` taken mod 4).
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum E8Status e8_element_sigma4(const struct E8Element *x, uint32_t power, struct E8Element **out);

/**
 * Releases an element; null is ignored.
 *
 * # Safety
 * `x` must be null or a handle not yet freed.
 */
void e8_element_free(struct E8Element *x);

/**
 * Runs a verification suite. `suite` is one of identities, dims, spin10,
 * orbits, wspace, all; `backend` is exact or approx. A negative `samples`
 * keeps each check's default.
 *
 * Configuration errors return `E8_STATUS_CONFIG`; failing checks still
 * return `E8_STATUS_OK` and show in [`e8_report_exit_code`].
 *
 * # Safety
 * `suite` and `backend` must be NUL-terminated strings; `out` must be writable.
 */
enum E8Status e8_report_run(const char *suite,
                            const char *backend,
                            double tol,
                            uint64_t seed,
                            int64_t samples,
                            struct E8Report **out);

/**
 * 0 when every check passed, 1 otherwise; -1 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
int32_t e8_report_exit_code(const struct E8Report *r);

/**
 * Number of checks, or 0 for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
size_t e8_report_check_count(const struct E8Report *r);

/**
 * The report as JSON, valid while the handle lives; null for a null handle.
 *
 * # Safety
 * `r` must be null or a live handle.
 */
const char *e8_report_json(const struct E8Report *r);

/**
 * Releases a report; null is ignored.
 *
 * # Safety
 * `r` must be null or a handle not yet freed.
 */
void e8_report_free(struct E8Report *r);

/**
 * Reduces a null-cone element of the fixed algebra to `1_-`. `seed` drives
 * the random retries.
 *
 * # Safety
 * `x` must be a live handle; `out` must be writable.
 */
enum E8Status e8_reduce_w(const struct E8Element *x,
                          double tol,
                          uint64_t seed,
                          struct E8Witness **out);

/**
 * Largest coefficient of `end - 1_-`; NaN for a null handle.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
double e8_witness_residual(const struct E8Witness *w);

/**
 * Number of steps, or 0 for a null handle.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
size_t e8_witness_step_count(const struct E8Witness *w);

/**
 * The witness as JSON, valid while the handle lives; null for a null handle.
 *
 * # Safety
 * `w` must be null or a live handle.
 */
const char *e8_witness_json(const struct E8Witness *w);

/**
 * Releases a witness; null is ignored.
 *
 * # Safety
 * `w` must be null or a handle not yet freed.
 */
void e8_witness_free(struct E8Witness *w);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* E8KIT_H */

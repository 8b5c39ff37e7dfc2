#ifndef ZHU_LAB_H
#define ZHU_LAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ZlFamily {
  ZL_FAMILY_TRIPLET = 0,
  ZL_FAMILY_SUPER = 1,
  ZL_FAMILY_TWISTED_SUPER = 2,
  ZL_FAMILY_W23 = 3,
} ZlFamily;

typedef enum ZlFormat {
  ZL_FORMAT_TEXT = 0,
  ZL_FORMAT_JSON = 1,
} ZlFormat;

typedef enum ZlStatus {
  ZL_STATUS_OK = 0,
  ZL_STATUS_NULL_POINTER = 1,
  ZL_STATUS_INVALID_INPUT = 2,
  ZL_STATUS_OUT_OF_RANGE = 3,
  ZL_STATUS_DOMAIN = 4,
  ZL_STATUS_INTERNAL = 5,
  ZL_STATUS_PANIC = 6,
} ZlStatus;

/**
 * Polynomial in `t` with exact rational coefficients.
 */
typedef struct ZlPoly ZlPoly;

/**
 * Result of a verification task.
 */
typedef struct ZlReport ZlReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or NULL after a success.
 * The pointer stays valid until the next call into this library on the same thread.
 */
const char *zl_last_error(void);

/**
 * # Safety
 * `s` must be NULL or a string returned by this library and not yet freed.
 */
void zl_string_free(char *s);

/**
 * Builds `coeffs[0] + coeffs[1] t + ...`; `len == 0` gives the zero polynomial.
 *
 * # Safety
 * `coeffs` must point to `len` readable values (it may be NULL when `len == 0`),
 * and `out` must be writable.
 */
enum ZlStatus zl_poly_from_ints(const int64_t *coeffs, size_t len, struct ZlPoly **out);

/**
 * The signed triple sum `G_p(t)`, `p >= 2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ZlStatus zl_poly_triple_sum(uint32_t p, struct ZlPoly **out);

/**
 * `H_p(t) = C(2p,p) C(2p-2,p-1) C(t+p,4p-1)`, `p >= 2`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ZlStatus zl_poly_closed_form(uint32_t p, struct ZlPoly **out);

/**
 * # Safety
 * `a` and `b` must be live handles and `out` must be writable.
 */
enum ZlStatus zl_poly_equal(const struct ZlPoly *a, const struct ZlPoly *b, bool *out);

/**
 * Degree, or -1 for the zero polynomial.
 *
 * # Safety
 * `poly` must be a live handle and `out` must be writable.
 */
enum ZlStatus zl_poly_degree(const struct ZlPoly *poly, int64_t *out);

/**
 * Value at `t = num/den` as a reduced fraction string such as `"-3/8"`.
 *
 * # Safety
 * `poly` must be a live handle and `out` must be writable.
 */
enum ZlStatus zl_poly_eval(const struct ZlPoly *poly, int64_t num, int64_t den, char **out);

/**
 * # Safety
 * `poly` must be a live handle and `out` must be writable.
 */
enum ZlStatus zl_poly_to_string(const struct ZlPoly *poly, char **out);

/**
 * # Safety
 * `poly` must be NULL or a handle from this library that has not been freed.
 */
void zl_poly_free(struct ZlPoly *poly);

/**
 * Total dimension of the Zhu algebra; `param` is ignored for `W23`.
 *
 * # Safety
 * `out` must be writable.
 */
enum ZlStatus zl_algebra_dim(enum ZlFamily f, uint32_t param, size_t *out);

/**
 * Full algebra report (blocks, center, decomposition) as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum ZlStatus zl_algebra_json(enum ZlFamily f, uint32_t param, char **out);

/**
 * Runs a task by its CLI name (`"triplet-ct"`, `"zhu-c0"`, ...). With
 * `has_range` false the task's default sweep is used.
 *
 * # Safety
 * `task` must be a nul-terminated string and `out` must be writable.
 */
enum ZlStatus zl_run(const char *task,
                     bool has_range,
                     uint32_t lo,
                     uint32_t hi,
                     bool diagnostic,
                     struct ZlReport **out);

/**
 * 0 when every claim passed, 1 otherwise.
 *
 * # Safety
 * `report` must be a live handle and `out` must be writable.
 */
enum ZlStatus zl_report_exit_code(const struct ZlReport *report, int32_t *out);

/**
 * # Safety
 * `report` must be a live handle; `passed` and `failed` must be writable.
 */
enum ZlStatus zl_report_counts(const struct ZlReport *report, size_t *passed, size_t *failed);

/**
 * # Safety
 * `report` must be a live handle and `out` must be writable.
 */
enum ZlStatus zl_report_render(const struct ZlReport *report, enum ZlFormat format, char **out);

/**
 * # Safety
 * `report` must be NULL or a handle from this library that has not been freed.
 */
void zl_report_free(struct ZlReport *report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ZHU_LAB_H */

#ifndef QTCAT_H
#define QTCAT_H

/* Generated by cbindgen from qtcat-capi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes returned by fallible entry points.
 */
typedef enum QtcatStatus {
  /**
   * Success.
   */
  QTCAT_STATUS_OK = 0,
  /**
   * A verification suite ran and reported failures.
   */
  QTCAT_STATUS_VERIFY_FAILED = 1,
  /**
   * Invalid arguments.
   */
  QTCAT_STATUS_USAGE = 2,
  /**
   * A required pointer argument was null.
   */
  QTCAT_STATUS_NULL_ARGUMENT = 3,
  /**
   * An internal panic was caught.
   */
  QTCAT_STATUS_PANIC = 4,
} QtcatStatus;

/**
 * Opaque polynomial handle.
 */
typedef struct QtcatPoly QtcatPoly;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; never freed by the caller.
 */
const char *qtcat_version(void);

/**
 * Combinatorial generating function for m-Dyck words of length n.
 *
 * # Safety
 * `out` must be a valid pointer to a pointer slot.
 */
enum QtcatStatus qtcat_genfun(uint32_t n, uint32_t m, struct QtcatPoly **out);

/**
 * Garsia-Haiman polynomial for the same parameters.
 *
 * # Safety
 * `out` must be a valid pointer to a pointer slot.
 */
enum QtcatStatus qtcat_genfun_gh(uint32_t n, uint32_t m, struct QtcatPoly **out);

/**
 * Rational-slope generating function for r x s Dyck paths.
 *
 * # Safety
 * `out` must be a valid pointer to a pointer slot.
 */
enum QtcatStatus qtcat_genfun_rational(uint32_t r, uint32_t s, struct QtcatPoly **out);

/**
 * Release a polynomial handle. Null is ignored.
 *
 * # Safety
 * `p` must be null or a handle produced by this library, not yet freed.
 */
void qtcat_poly_free(struct QtcatPoly *p);

/**
 * Canonical JSON form of a polynomial; free with `qtcat_string_free`.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *qtcat_poly_json(const struct QtcatPoly *p);

/**
 * Human-readable text form; free with `qtcat_string_free`.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *qtcat_poly_text(const struct QtcatPoly *p);

/**
 * Coefficient of q^j t^k as a decimal string (coefficients may exceed
 * any fixed-width integer); free with `qtcat_string_free`.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
char *qtcat_poly_coeff(const struct QtcatPoly *p, uint32_t j, uint32_t k);

/**
 * 1 when the two polynomials are equal, 0 when not, -1 on null input.
 *
 * # Safety
 * `a` and `b` must be null or live handles.
 */
int32_t qtcat_poly_eq(const struct QtcatPoly *a, const struct QtcatPoly *b);

/**
 * 1 when p(q,t) = p(t,q), 0 when not, -1 on null input.
 *
 * # Safety
 * `p` must be null or a live handle.
 */
int32_t qtcat_poly_is_symmetric(const struct QtcatPoly *p);

/**
 * Release a string produced by this library. Null is ignored.
 *
 * # Safety
 * `s` must be null or a string produced by this library, not yet freed.
 */
void qtcat_string_free(char *s);

/**
 * Run a verification suite ("symmetry", "gh", "coeffs", "n5",
 * "ratslope", "gm", "involution", "all"). When `report_json` is
 * non-null it receives the machine-readable report; free it with
 * `qtcat_string_free`.
 *
 * # Safety
 * `suite` must be a NUL-terminated string; `report_json` may be null.
 */
enum QtcatStatus qtcat_verify(const char *suite, uint32_t m_max, char **report_json);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* QTCAT_H */

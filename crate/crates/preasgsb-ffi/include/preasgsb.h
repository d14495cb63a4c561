#ifndef PREASGSB_H
#define PREASGSB_H

/* Generated by cbindgen from preasgsb-ffi; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Outcome of a call across the C boundary.
 */
typedef enum PgsbStatus {
  /**
   * The call succeeded.
   */
  PGSB_STATUS_OK = 0,
  /**
   * The input text did not parse or validate.
   */
  PGSB_STATUS_ERR_PARSE = 1,
  /**
   * The input was well formed but mathematically unusable, for example a
   * non-associative multiplication table.
   */
  PGSB_STATUS_ERR_SEMANTIC = 2,
  /**
   * A required pointer argument was NULL.
   */
  PGSB_STATUS_ERR_NULL = 3,
  /**
   * A string argument was not valid UTF-8.
   */
  PGSB_STATUS_ERR_UTF8 = 4,
  /**
   * An internal panic was caught at the boundary.
   */
  PGSB_STATUS_ERR_PANIC = 5,
} PgsbStatus;

/**
 * An opaque parsed presentation.
 */
typedef struct PgsbPresentation PgsbPresentation;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse presentation text into a fresh handle.
 *
 * On success `*out` receives a handle to free with
 * [`pgsb_presentation_free`]; on failure `*out` is NULL.
 *
 * # Safety
 * `text` must be a valid NUL-terminated string and `out` a valid pointer.
 */
enum PgsbStatus pgsb_presentation_parse(const char *text, struct PgsbPresentation **out);

/**
 * Render a presentation in its canonical text form.
 *
 * On success `*out` receives a string to free with [`pgsb_string_free`].
 *
 * # Safety
 * `pres` must be a live handle from this library and `out` a valid
 * pointer.
 */
enum PgsbStatus pgsb_presentation_to_string(const struct PgsbPresentation *pres, char **out);

/**
 * Number of relations held by a presentation; 0 for a NULL handle.
 *
 * # Safety
 * `pres` must be NULL or a live handle from this library.
 */
size_t pgsb_relation_count(const struct PgsbPresentation *pres);

/**
 * Reduce a polynomial, given as text over the presentation's alphabet, to
 * its normal form.
 *
 * On success `*out` receives the rendered normal form (`"ZERO"` for the
 * zero class), to free with [`pgsb_string_free`].
 *
 * # Safety
 * `pres` must be a live handle, `poly` a valid NUL-terminated string, and
 * `out` a valid pointer.
 */
enum PgsbStatus pgsb_normal_form(const struct PgsbPresentation *pres, const char *poly, char **out);

/**
 * Reduce every composition of the presentation within the bound and count
 * the ones that do not vanish; zero in `*failures` means the system is
 * closed at this bound.
 *
 * # Safety
 * `pres` must be a live handle and `failures` a valid pointer.
 */
enum PgsbStatus pgsb_check(const struct PgsbPresentation *pres, size_t max_deg, size_t *failures);

/**
 * Close the presentation under composition within the bound, spending at
 * most `max_rounds` enlargement rounds.
 *
 * On success `*out` receives a fresh handle for the (possibly unchanged)
 * system and `*converged` records whether a final pass found no surviving
 * composition.
 *
 * # Safety
 * `pres` must be a live handle; `out` and `converged` must be valid
 * pointers.
 */
enum PgsbStatus pgsb_complete(const struct PgsbPresentation *pres,
                              size_t max_deg,
                              size_t max_rounds,
                              struct PgsbPresentation **out,
                              bool *converged);

/**
 * Count the reduced words of each degree `1..=max_deg` into the
 * caller-provided array `counts` of length `max_deg`.
 *
 * # Safety
 * `pres` must be a live handle and `counts` valid for `max_deg` writes.
 */
enum PgsbStatus pgsb_dims(const struct PgsbPresentation *pres, size_t max_deg, size_t *counts);

/**
 * Release a presentation handle; NULL is ignored.
 *
 * # Safety
 * `pres` must be NULL or a handle from this library not yet freed.
 */
void pgsb_presentation_free(struct PgsbPresentation *pres);

/**
 * Release a string produced by this library; NULL is ignored.
 *
 * # Safety
 * `s` must be NULL or a string from this library not yet freed.
 */
void pgsb_string_free(char *s);

/**
 * The message for this thread's most recent failure, or NULL if the last
 * call succeeded.  The caller frees the string with [`pgsb_string_free`].
 */
char *pgsb_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PREASGSB_H */

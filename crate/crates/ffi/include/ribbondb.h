#ifndef RIBBONDB_H
#define RIBBONDB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum RibbonStatus {
  RIBBON_STATUS_OK = 0,
  RIBBON_STATUS_NULL_POINTER = 1,
  RIBBON_STATUS_INVALID_UTF8 = 2,
  RIBBON_STATUS_PARSE_ERROR = 3,
  /**
   * A closed diagram, a knot, or a valid cut set was required.
   */
  RIBBON_STATUS_CONTRACT_ERROR = 4,
  RIBBON_STATUS_OVERFLOW = 5,
  RIBBON_STATUS_UNKNOWN_KNOT = 6,
  RIBBON_STATUS_INTERNAL = 7,
} RibbonStatus;

/**
 * Opaque planar diagram.
 */
typedef struct RibbonDiagram RibbonDiagram;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread, or null. Free with
 * [`ribbon_string_free`].
 */
char *ribbon_last_error(void);

/**
 * Releases a string returned by this library.
 *
 * # Safety
 * `s` is null or was returned by this library and not yet freed.
 */
void ribbon_string_free(char *s);

/**
 * Library version as a static string.
 */
const char *ribbon_version(void);

/**
 * Parses PD text such as `X_{1,4,2,5} X_{3,6,4,1} X_{5,2,6,3}`.
 *
 * # Safety
 * `text` is a NUL-terminated string; `out` is writable.
 */
enum RibbonStatus ribbon_diagram_parse(const char *text, struct RibbonDiagram **out);

/**
 * The table diagram of a knot such as `6_1`.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum RibbonStatus ribbon_diagram_from_table(const char *name, struct RibbonDiagram **out);

/**
 * The `(β∘τ)` closure of a table knot's cut tangle.
 *
 * # Safety
 * `name` is a NUL-terminated string; `out` is writable.
 */
enum RibbonStatus ribbon_unlink_candidate(const char *name, struct RibbonDiagram **out);

/**
 * Releases a diagram handle.
 *
 * # Safety
 * `pd` is null or a handle from this library not yet freed.
 */
void ribbon_diagram_free(struct RibbonDiagram *pd);

/**
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_diagram_crossings(const struct RibbonDiagram *pd, size_t *out);

/**
 * Canonical PD text. Free with [`ribbon_string_free`].
 *
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_diagram_to_string(const struct RibbonDiagram *pd, char **out);

/**
 * Number of link components, crossingless circles included.
 *
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_components(const struct RibbonDiagram *pd, size_t *out);

/**
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_writhe(const struct RibbonDiagram *pd, int64_t *out);

/**
 * Jones polynomial as text, e.g. `-t^-4 + t^-3 + t^-1`.
 *
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_jones(const struct RibbonDiagram *pd, char **out);

/**
 * Normalized Alexander polynomial of a knot as text.
 *
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_alexander(const struct RibbonDiagram *pd, char **out);

/**
 * `|Δ(-1)|` of a knot.
 *
 * # Safety
 * `pd` is a live handle; `out` is writable.
 */
enum RibbonStatus ribbon_determinant(const struct RibbonDiagram *pd, uint64_t *out);

/**
 * Greedy R1/R2 reduction. `*out_components` is the number of circles
 * reached, or 0 when the diagram was not reduced to crossingless circles.
 *
 * # Safety
 * `pd` is a live handle; `out_components` is writable.
 */
enum RibbonStatus ribbon_certify_unlink(const struct RibbonDiagram *pd, size_t *out_components);

/**
 * Verification report as JSON for one knot, or the whole table when
 * `name` is null. `max_steps` of 0 selects the default budget.
 *
 * # Safety
 * `name` is null or a NUL-terminated string; `out` is writable.
 */
enum RibbonStatus ribbon_verify_json(const char *name, size_t max_steps, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RIBBONDB_H */

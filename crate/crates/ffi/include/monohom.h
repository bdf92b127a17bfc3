#ifndef MONOHOM_H
#define MONOHOM_H

/* Generated by cbindgen. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum MonohomStatus {
  MONOHOM_STATUS_OK = 0,
  MONOHOM_STATUS_NULL_POINTER = 1,
  MONOHOM_STATUS_INVALID_UTF8 = 2,
  MONOHOM_STATUS_PARSE = 3,
  /**
   * Input violates a mathematical hypothesis (not a system of
   * parameters, infinite colength, `b` not inside `a`, ...).
   */
  MONOHOM_STATUS_HYPOTHESIS = 4,
  /**
   * A size or search cap was hit.
   */
  MONOHOM_STATUS_CAPACITY = 5,
  MONOHOM_STATUS_INTERNAL = 6,
  MONOHOM_STATUS_PANIC = 7,
} MonohomStatus;

/**
 * Opaque parsed ring spec.
 */
typedef struct MonohomRing MonohomRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parse a ring spec (`ring`, `relations`, `sop`, `prime`, `seed` lines).
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum MonohomStatus monohom_ring_parse(const char *spec, struct MonohomRing **out);

/**
 * # Safety
 * `ring` must be null or a handle from [`monohom_ring_parse`] not yet freed.
 */
void monohom_ring_free(struct MonohomRing *ring);

/**
 * Krull dimension of the ring.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum MonohomStatus monohom_ring_dim(const struct MonohomRing *ring, uint32_t *out);

/**
 * Least `n` with `m^n ∩ Γ_m(R) = 0`.
 *
 * # Safety
 * `ring` must be a live handle and `out` a valid pointer.
 */
enum MonohomStatus monohom_stabilization_index(const struct MonohomRing *ring, uint32_t *out);

/**
 * JSON report for `Hom(R/a, R/b)`; ideals are written like `(y^2, x)`.
 *
 * # Safety
 * `ring` must be a live handle, `a` and `b` NUL-terminated strings and
 * `out_json` a valid pointer. The result must be freed with
 * [`monohom_string_free`].
 */
enum MonohomStatus monohom_analyze(const struct MonohomRing *ring,
                                   const char *a,
                                   const char *b,
                                   char **out_json);

/**
 * JSON classification of the exponent lattice `[1, max]^d` over the spec's
 * sop.
 *
 * # Safety
 * As for [`monohom_analyze`].
 */
enum MonohomStatus monohom_grid(const struct MonohomRing *ring, uint32_t max, char **out_json);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void monohom_string_free(char *s);

/**
 * Message for the last failed call on this thread, or null. Valid until
 * the next call into this library from the same thread.
 */
const char *monohom_last_error(void);

const char *monohom_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MONOHOM_H */

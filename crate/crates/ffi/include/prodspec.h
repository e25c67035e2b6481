#ifndef PRODSPEC_H
#define PRODSPEC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum PrStatus {
  PR_STATUS_OK = 0,
  PR_STATUS_NULL_ARGUMENT = 1,
  PR_STATUS_INVALID_UTF8 = 2,
  PR_STATUS_SYNTAX = 3,
  /**
   * Well-formed input that does not describe a valid ring or element.
   */
  PR_STATUS_INVALID = 4,
  PR_STATUS_TOO_LARGE = 5,
  PR_STATUS_NOT_PRIME = 6,
  PR_STATUS_OUT_OF_RANGE = 7,
  PR_STATUS_UNKNOWN_PROPERTY = 8,
  /**
   * A property produced a counterexample; the report is still returned.
   */
  PR_STATUS_PROPERTY_FAILED = 9,
  PR_STATUS_INTERNAL = 10,
} PrStatus;

typedef enum PrClass {
  PR_CLASS_TAME = 0,
  PR_CLASS_WILD = 1,
} PrClass;

/**
 * A parsed ring together with its spectrum.
 */
typedef struct PrRing PrRing;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a ring expression such as `Z/4 x Z/12/(6)`.
 *
 * # Safety
 * `expr` must be a NUL-terminated string and `out` a writable pointer.
 */
enum PrStatus pr_ring_parse(const char *expr, struct PrRing **out);

/**
 * # Safety
 * `ring` must come from `pr_ring_parse` and not have been freed; null is ignored.
 */
void pr_ring_free(struct PrRing *ring);

/**
 * Number of elements; 0 for a null handle.
 *
 * # Safety
 * `ring` must be null or a live handle.
 */
uint64_t pr_ring_size(const struct PrRing *ring);

/**
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t pr_ring_spectrum_len(const struct PrRing *ring);

/**
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t pr_ring_idempotent_count(const struct PrRing *ring);

/**
 * # Safety
 * `ring` must be null or a live handle.
 */
size_t pr_ring_krull_dim(const struct PrRing *ring);

/**
 * # Safety
 * `ring` must be a live handle and `out` writable.
 */
enum PrStatus pr_ring_component_count(const struct PrRing *ring, size_t *out);

/**
 * Renders the `index`-th prime (0-based, spectrum order) by generators.
 *
 * # Safety
 * `ring` must be a live handle and `out` writable. The string must be
 * released with `pr_string_free`.
 */
enum PrStatus pr_ring_prime_describe(const struct PrRing *ring, size_t index, char **out);

/**
 * Classifies the ideal generated by `generators` (a literal list such as
 * `(2,0),(0,1)`). For a tame prime, `factor` receives the 0-based factor index.
 *
 * # Safety
 * `ring` must be a live handle, `generators` NUL-terminated, `kind` writable;
 * `factor` may be null.
 */
enum PrStatus pr_classify_prime(const struct PrRing *ring,
                                const char *generators,
                                enum PrClass *kind,
                                size_t *factor);

/**
 * Runs property `id` (or `all`) and writes the JSON report. With a non-null
 * `instance`, replays that single instance instead of generating. `trials`
 * of 0 keeps the property default.
 *
 * # Safety
 * `id` must be NUL-terminated, `instance` null or NUL-terminated, `out_json`
 * writable. The report must be released with `pr_string_free`.
 */
enum PrStatus pr_verify(const char *id,
                        uint64_t seed,
                        uint64_t trials,
                        const char *instance,
                        char **out_json);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void pr_string_free(char *s);

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call into the library on the same thread; do not free.
 */
const char *pr_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PRODSPEC_H */

#ifndef SUPERCATALAN_H
#define SUPERCATALAN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ScStatus {
  SC_STATUS_OK = 0,
  SC_STATUS_NULL_POINTER = 1,
  SC_STATUS_INVALID_ARGUMENT = 2,
  SC_STATUS_UNKNOWN_ID = 3,
  SC_STATUS_RANGE_TOO_LARGE = 4,
  SC_STATUS_INTERNAL = 5,
  SC_STATUS_PANIC = 6,
} ScStatus;

/**
 * Polynomial over the rationals or over `Q(q)`.
 */
typedef struct ScPoly ScPoly;

/**
 * Identity checker bound to a fixed set of ranges.
 */
typedef struct ScVerifier ScVerifier;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread; empty after a success.
 * The pointer stays valid until the next call on the same thread.
 */
const char *sc_last_error_message(void);

/**
 * # Safety
 * `s` is NULL or a string returned by this library and not yet freed.
 */
void sc_string_free(char *s);

/**
 * Closed form `p_n` of the family `name` (`lucas`, `l`, `vq`, ...).
 * `s` may be NULL for 1.
 *
 * # Safety
 * `name` is a valid string, `s` is NULL or a valid string, `out` is writable.
 */
enum ScStatus sc_family_poly(const char *name,
                             uint32_t m,
                             const char *s,
                             uint32_t n,
                             struct ScPoly **out);

/**
 * # Safety
 * `p` is NULL or a handle from [`sc_family_poly`] not yet freed.
 */
void sc_poly_free(struct ScPoly *p);

/**
 * Degree of `p`; -1 for the zero polynomial.
 *
 * # Safety
 * `p` is a live handle and `out` is writable.
 */
enum ScStatus sc_poly_degree(const struct ScPoly *p, int64_t *out);

/**
 * Canonical rendering of the coefficient of `x^k`.
 *
 * # Safety
 * `p` is a live handle and `out` is writable.
 */
enum ScStatus sc_poly_coeff(const struct ScPoly *p, uint32_t k, char **out);

/**
 * Whole polynomial, descending powers.
 *
 * # Safety
 * `p` is a live handle and `out` is writable.
 */
enum ScStatus sc_poly_to_string(const struct ScPoly *p, char **out);

/**
 * Moment `L(x^n)` of the functional `name` (`lambda_m`, `phi_q`, ...).
 * `s` may be NULL for the functional's default.
 *
 * # Safety
 * `name` is a valid string, `s` is NULL or a valid string, `out` is writable.
 */
enum ScStatus sc_moment(const char *name, uint32_t m, const char *s, uint32_t n, char **out);

/**
 * # Safety
 * `out` is writable.
 */
enum ScStatus sc_verifier_new(uint32_t max_n,
                              uint32_t max_l,
                              uint32_t max_m,
                              uint32_t max_j,
                              uint32_t order,
                              struct ScVerifier **out);

/**
 * # Safety
 * `v` is NULL or a handle from [`sc_verifier_new`] not yet freed.
 */
void sc_verifier_free(struct ScVerifier *v);

/**
 * Runs identity `id`; writes point counts and the number of flags.
 *
 * # Safety
 * `v` is a live handle, `id` a valid string, out pointers writable or NULL.
 */
enum ScStatus sc_verifier_check(const struct ScVerifier *v,
                                const char *id,
                                uint64_t *passed,
                                uint64_t *failed,
                                uint64_t *flags);

/**
 * Report for identity `id` as JSON.
 *
 * # Safety
 * `v` is a live handle, `id` a valid string, `out` writable.
 */
enum ScStatus sc_verifier_report_json(const struct ScVerifier *v, const char *id, char **out);

/**
 * Number of registered identities.
 */
uint64_t sc_identity_count(void);

/**
 * Id of the `index`-th registered identity, or NULL when out of range.
 * The string is static; do not free it.
 */
const char *sc_identity_id(uint64_t index);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SUPERCATALAN_H */

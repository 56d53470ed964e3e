#ifndef APOLAR_KIT_H
#define APOLAR_KIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result code of every fallible call.
 */
typedef enum ApkStatus {
  APK_STATUS_OK = 0,
  APK_STATUS_NULL_POINTER = 1,
  APK_STATUS_INVALID_UTF8 = 2,
  APK_STATUS_INVALID_INPUT = 3,
  APK_STATUS_FAILED = 4,
  APK_STATUS_PANIC = 5,
} ApkStatus;

/**
 * Opaque homogeneous polynomial with rational coefficients.
 */
typedef struct ApkPolynomial ApkPolynomial;

/**
 * Precision and tolerance for the numeric steps. Zero fields mean defaults.
 */
typedef struct ApkConfig {
  uint32_t precision_bits;
  double tolerance;
} ApkConfig;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *apk_last_error(void);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed already.
 */
void apk_string_free(char *s);

/**
 * Parses `{"nvars", "degree", "terms": [{"exps", "coeff"}]}` into a handle.
 *
 * # Safety
 * `json` must be a valid C string and `out` writable.
 */
enum ApkStatus apk_polynomial_from_json(const char *json, struct ApkPolynomial **out);

/**
 * # Safety
 * `p` must come from [`apk_polynomial_from_json`] or be null.
 */
void apk_polynomial_free(struct ApkPolynomial *p);

/**
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ApkStatus apk_polynomial_to_json(const struct ApkPolynomial *p, char **out);

/**
 * Writes the number of variables and the degree.
 *
 * # Safety
 * `p` must be a live handle; both outputs writable.
 */
enum ApkStatus apk_polynomial_shape(const struct ApkPolynomial *p,
                                    uintptr_t *nvars,
                                    uint32_t *degree);

/**
 * Hilbert function of the apolar algebra as JSON
 * `{"socle_degree", "hilbert", "socle_dim"}`.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ApkStatus apk_hilbert_function(const struct ApkPolynomial *p, char **out);

/**
 * Dimension of the degree `k` piece of the apolar ideal.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ApkStatus apk_apolar_dim(const struct ApkPolynomial *p, uint32_t k, uintptr_t *out);

/**
 * Rank of the first catalecticant of a cubic, a lower bound on its Waring rank.
 *
 * # Safety
 * `p` must be a live handle and `out` writable.
 */
enum ApkStatus apk_rank_lower_bound(const struct ApkPolynomial *p, uintptr_t *out);

/**
 * Decides whether a cubic in `n` variables is a sum of `n` cubes. On success
 * `is_fermat` is set and, when `report` is not null, the decomposition (or
 * the reason for rejection) is written there as JSON.
 *
 * # Safety
 * `p` must be a live handle, `cfg` null or valid, `is_fermat` writable and
 * `report` null or writable.
 */
enum ApkStatus apk_fermat_detect(const struct ApkPolynomial *p,
                                 uint64_t seed,
                                 const struct ApkConfig *cfg,
                                 bool *is_fermat,
                                 char **report);

/**
 * Upper bound on the Waring rank of the alpha cubic of a tetragonal curve of genus `g`.
 */
int64_t apk_theorem_b_bound(int64_t g);

/**
 * Plane model numerology of a tetragonal curve of genus `g` as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApkStatus apk_numerology(int64_t g, char **out);

/**
 * Ampleness certificate on the blow-up of the plane in four points, as JSON.
 *
 * # Safety
 * `out` must be writable.
 */
enum ApkStatus apk_nakai(int64_t k, int64_t a_max, char **out);

/**
 * Runs the trigonal verification for genus `g` and writes the JSON report.
 * `passed` receives the overall verdict.
 *
 * # Safety
 * `cfg` null or valid; `passed` and `out` writable.
 */
enum ApkStatus apk_verify_a(uint32_t g,
                            uintptr_t trials,
                            uint64_t seed,
                            const struct ApkConfig *cfg,
                            bool *passed,
                            char **out);

/**
 * Runs the tetragonal verification for genus `g`. When `has_split` is false
 * every split is sampled, otherwise only `(b1, b2)`.
 *
 * # Safety
 * `cfg` null or valid; `passed` and `out` writable.
 */
enum ApkStatus apk_verify_b(uint32_t g,
                            bool has_split,
                            int64_t b1,
                            int64_t b2,
                            uintptr_t trials,
                            uint64_t seed,
                            const struct ApkConfig *cfg,
                            bool *passed,
                            char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* APOLAR_KIT_H */

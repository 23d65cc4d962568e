#ifndef RANKONE_H
#define RANKONE_H

/* This file is generated by cbindgen from rankone-ffi; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code of every FFI call.
 */
typedef enum RankoneStatus {
  RANKONE_STATUS_OK = 0,
  RANKONE_STATUS_NULL_POINTER = 1,
  RANKONE_STATUS_INVALID_PARAMETER = 2,
  RANKONE_STATUS_DOMAIN_ERROR = 3,
  RANKONE_STATUS_RANGE_ERROR = 4,
  RANKONE_STATUS_INTERNAL_ERROR = 5,
} RankoneStatus;

/**
 * Family selector for [`rankone_space_new`].
 */
typedef enum RankoneFamily {
  RANKONE_FAMILY_AI = 0,
  RANKONE_FAMILY_AII = 1,
  RANKONE_FAMILY_AIII = 2,
  RANKONE_FAMILY_BII = 3,
  RANKONE_FAMILY_CII = 4,
  RANKONE_FAMILY_FII = 5,
} RankoneFamily;

/**
 * Opaque handle to a catalog entry.
 */
typedef struct RankoneSpace RankoneSpace;

/**
 * Scalar facts about a space.
 */
typedef struct RankoneSpaceInfo {
  uint32_t m_alpha;
  uint32_t m_2alpha;
  /**
   * 0 for a single restricted root, 1 when 2*alpha is present.
   */
  uint32_t root_kind;
  uint32_t dim_gk;
  double jacobi_a;
  double jacobi_b;
} RankoneSpaceInfo;

/**
 * Classification of one radial point.
 */
typedef struct RankoneOrbitClass {
  /**
   * 0 Normalizer, 1 Regular, 2 ContinuousNonRegular.
   */
  uint32_t kind;
  bool alpha_annihilated;
  bool two_alpha_annihilated;
  uint32_t coset_dim;
} RankoneOrbitClass;

/**
 * Convergence diagnosis of a Plancherel series.
 */
typedef struct RankoneSeriesDiagnosis {
  /**
   * 0 Convergent, 1 Divergent, 2 Inconclusive.
   */
  uint32_t verdict;
  /**
   * NaN when no block means were available to fit.
   */
  double tail_exponent;
  double log_slope;
  double r_squared;
  bool closed_form_l2;
  bool agree;
} RankoneSeriesDiagnosis;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Create a space handle. `q` is the family parameter and must be 0 for
 * AI, AII and FII.
 *
 * # Safety
 * `out` must be a valid writable pointer.
 */
enum RankoneStatus rankone_space_new(enum RankoneFamily family,
                                     uint32_t q,
                                     struct RankoneSpace **out);

/**
 * Release a handle created by [`rankone_space_new`]. Null is a no-op.
 *
 * # Safety
 * `space` must be null or a pointer returned by `rankone_space_new` that
 * has not been freed yet.
 */
void rankone_space_free(struct RankoneSpace *space);

/**
 * Fill `info` with the multiplicities, root kind, dimension and Jacobi
 * exponents of the space.
 *
 * # Safety
 * `space` must be a live handle; `info` must be writable.
 */
enum RankoneStatus rankone_space_info(const struct RankoneSpace *space,
                                      struct RankoneSpaceInfo *info);

/**
 * Copy the display name (UTF-8, no terminator added beyond the copied
 * bytes) into `buf`. `written` receives the full length; the copy is
 * truncated to `len`.
 *
 * # Safety
 * `buf` must point to at least `len` writable bytes.
 */
enum RankoneStatus rankone_space_name(const struct RankoneSpace *space,
                                      char *buf,
                                      uintptr_t len,
                                      uintptr_t *written);

/**
 * Spherical function value at radial coordinate `t`.
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
enum RankoneStatus rankone_spherical(const struct RankoneSpace *space,
                                     uint32_t n,
                                     double t,
                                     double *out);

/**
 * Spherical function through the hypergeometric oracle (n <= 200).
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
enum RankoneStatus rankone_spherical_hypergeometric(const struct RankoneSpace *space,
                                                    uint32_t n,
                                                    double t,
                                                    double *out);

/**
 * Dimension of the n-th spherical representation.
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
enum RankoneStatus rankone_dim(const struct RankoneSpace *space, uint32_t n, double *out);

/**
 * Classify a radial point with tolerance `eps` (pass 0 for the default).
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
enum RankoneStatus rankone_classify(const struct RankoneSpace *space,
                                    double t,
                                    double eps,
                                    struct RankoneOrbitClass *out);

/**
 * Closed-form verdict for a pair of radial points.
 *
 * # Safety
 * `space` must be a live handle; `l1` and `l2` must be writable.
 */
enum RankoneStatus rankone_decide_pair(const struct RankoneSpace *space,
                                       double t1,
                                       double t2,
                                       bool *l1,
                                       bool *l2);

/**
 * Closed-form verdict for a triple of radial points.
 *
 * # Safety
 * `space` must be a live handle; `l1` and `l2` must be writable.
 */
enum RankoneStatus rankone_decide_triple(const struct RankoneSpace *space,
                                         double t1,
                                         double t2,
                                         double t3,
                                         bool *l1,
                                         bool *l2);

/**
 * Whether integrable convolutions on this space are automatically
 * square-integrable.
 *
 * # Safety
 * `space` must be a live handle; `out` must be writable.
 */
enum RankoneStatus rankone_dichotomy(const struct RankoneSpace *space, bool *out);

/**
 * Sum the Plancherel series for 1-3 radial points up to `n_max` terms and
 * diagnose convergence against the closed-form verdict.
 *
 * # Safety
 * `ts` must point to `ts_len` readable doubles; `out` must be writable.
 */
enum RankoneStatus rankone_norm_diagnose(const struct RankoneSpace *space,
                                         const double *ts,
                                         uintptr_t ts_len,
                                         uint64_t n_max,
                                         struct RankoneSeriesDiagnosis *out);

/**
 * Static description of a status code.
 */
const char *rankone_status_message(enum RankoneStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* RANKONE_H */

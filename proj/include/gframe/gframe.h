/*
 * gframe C API.
 *
 * Frames are opaque, immutable handles created by the gframe_*_create,
 * gframe_gen_*, gframe_load_* and transform functions and released with
 * gframe_frame_free. Every fallible call returns a gframe_status; on failure
 * gframe_last_error() holds a message for the calling thread and, for
 * GFRAME_ERR_NOT_A_FRAME, gframe_last_lambda_min() the offending smallest
 * eigenvalue of the frame operator.
 *
 * Matrices cross the boundary as separate row-major real and imaginary
 * arrays. Strings returned through char** are owned by the caller and must be
 * released with gframe_string_free.
 */
#ifndef GFRAME_GFRAME_H
#define GFRAME_GFRAME_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(GFRAME_BUILDING_LIBRARY)
#    define GFRAME_API __declspec(dllexport)
#  else
#    define GFRAME_API __declspec(dllimport)
#  endif
#else
#  define GFRAME_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gframe_status {
  GFRAME_OK = 0,
  GFRAME_ERR_INVALID_ARGUMENT = 1,
  GFRAME_ERR_DIMENSION_MISMATCH = 2,
  GFRAME_ERR_NOT_SQUARE = 3,
  GFRAME_ERR_NOT_HERMITIAN = 4,
  GFRAME_ERR_NO_CONVERGENCE = 5,
  GFRAME_ERR_NOT_POSITIVE_DEFINITE = 6,
  GFRAME_ERR_NOT_A_FRAME = 7,
  GFRAME_ERR_NOT_PARSEVAL = 8,
  GFRAME_ERR_NOT_A_DUAL = 9,
  GFRAME_ERR_EPSILON_OUT_OF_RANGE = 10,
  GFRAME_ERR_RETRY_CAP_EXCEEDED = 11,
  GFRAME_ERR_PARSE = 12,
  GFRAME_ERR_IO = 13,
  GFRAME_ERR_INTERNAL = 99
} gframe_status;

typedef struct gframe_frame gframe_frame;

typedef struct gframe_bounds {
  double lower;   /* A = lambda_min(S) */
  double upper;   /* B = lambda_max(S) */
  double epsilon; /* max(1 - A, B - 1) */
} gframe_bounds;

typedef struct gframe_dual_certificate {
  double residual; /* ||sum_i Lambda_i^* Gamma_i - I||_F */
  double tolerance;
  int passed;
} gframe_dual_certificate;

typedef struct gframe_proximity {
  double gap;
  double bound;
} gframe_proximity;

GFRAME_API const char* gframe_version(void);
GFRAME_API const char* gframe_status_string(gframe_status status);
GFRAME_API const char* gframe_last_error(void);
GFRAME_API double gframe_last_lambda_min(void);
GFRAME_API void gframe_string_free(char* s);

/* Construction. `rows[i]` is k_i; `re`/`im` hold the operators back to back,
 * each k_i x dim_h row-major. `im` may be NULL for real operators. */
GFRAME_API gframe_status gframe_frame_create(size_t dim_h, size_t count, const size_t* rows,
                                             const double* re, const double* im,
                                             gframe_frame** out);
GFRAME_API gframe_status gframe_frame_clone(const gframe_frame* f, gframe_frame** out);
GFRAME_API void gframe_frame_free(gframe_frame* f);

GFRAME_API size_t gframe_frame_dim(const gframe_frame* f);
GFRAME_API size_t gframe_frame_count(const gframe_frame* f);
GFRAME_API size_t gframe_frame_rows(const gframe_frame* f, size_t index);
/* Copies operator `index` into caller buffers of k_i * dim_h doubles. */
GFRAME_API gframe_status gframe_frame_operator_data(const gframe_frame* f, size_t index,
                                                    double* re, double* im);

/* Interchange JSON. */
GFRAME_API gframe_status gframe_frame_from_json(const char* json, gframe_frame** out);
GFRAME_API gframe_status gframe_frame_to_json(const gframe_frame* f, char** json_out);
GFRAME_API gframe_status gframe_frame_load(const char* path, gframe_frame** out);
GFRAME_API gframe_status gframe_frame_save(const gframe_frame* f, const char* path);

/* Frame operator S (dim_h x dim_h, row-major) and its optimal bounds. */
GFRAME_API gframe_status gframe_frame_operator(const gframe_frame* f, double* re, double* im);
GFRAME_API gframe_status gframe_validate(const gframe_frame* f, gframe_bounds* out);

/* Analysis / synthesis / reconstruction. Vectors are split re/im arrays.
 * Analysis output and synthesis input are the concatenation of the k_i-length
 * components, sum k_i entries in total. */
GFRAME_API gframe_status gframe_analysis(const gframe_frame* f, const double* x_re,
                                         const double* x_im, double* y_re, double* y_im);
GFRAME_API gframe_status gframe_synthesis(const gframe_frame* f, const double* y_re,
                                          const double* y_im, double* x_re, double* x_im);
GFRAME_API gframe_status gframe_reconstruct(const gframe_frame* f, const double* x_re,
                                            const double* x_im, double* out_re, double* out_im);

/* Canonical transforms and duals. */
GFRAME_API gframe_status gframe_canonical_parseval(const gframe_frame* f, gframe_frame** out);
GFRAME_API gframe_status gframe_canonical_dual(const gframe_frame* f, gframe_frame** out);
GFRAME_API gframe_status gframe_random_alternate_dual(const gframe_frame* f, double magnitude,
                                                      uint64_t seed, gframe_frame** out);
GFRAME_API gframe_status gframe_verify_alternate_dual(const gframe_frame* lam,
                                                      const gframe_frame* gam,
                                                      gframe_dual_certificate* out);
GFRAME_API gframe_status gframe_frobenius_distance_sq(const gframe_frame* a, const gframe_frame* b,
                                                      double* out);

/* Proximity bounds (require epsilon < 1). */
GFRAME_API gframe_status gframe_parseval_proximity_bound(const gframe_frame* f,
                                                         gframe_proximity* out);
GFRAME_API gframe_status gframe_dual_proximity_bound(const gframe_frame* f,
                                                     gframe_proximity* out);

/* Generators; all deterministic in their arguments. */
GFRAME_API gframe_status gframe_gen_random(size_t n, const size_t* counts, size_t count_len,
                                           uint64_t seed, gframe_frame** out);
GFRAME_API gframe_status gframe_gen_parseval(size_t n, const size_t* counts, size_t count_len,
                                             uint64_t seed, gframe_frame** out);
GFRAME_API gframe_status gframe_gen_nearly_parseval(size_t n, const size_t* counts,
                                                    size_t count_len, double epsilon,
                                                    uint64_t seed, gframe_frame** out);
GFRAME_API gframe_status gframe_gen_extremal(size_t n, double epsilon, gframe_frame** out);

/* Reports as JSON documents. `suite` is one of "budgets", "parseval-approx",
 * "duals", "bounds", "all". `overall` receives 1 when every check passed. */
GFRAME_API gframe_status gframe_analyze_json(const gframe_frame* f, char** json_out);
GFRAME_API gframe_status gframe_verify_json(const gframe_frame* f, const char* suite,
                                            unsigned trials, uint64_t seed, char** json_out,
                                            int* overall);

#ifdef __cplusplus
}
#endif

#endif /* GFRAME_GFRAME_H */

#ifndef WASS1D_H
#define WASS1D_H

#include <stddef.h>
#include <stdint.h>

#if defined(WASS1D_BUILDING_LIBRARY)
#define WASS1D_API __attribute__((visibility("default")))
#else
#define WASS1D_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum w1d_status {
  W1D_OK = 0,
  W1D_INVALID_MEASURE,
  W1D_NON_POSITIVE_WEIGHT,
  W1D_WEIGHT_SUM_OUT_OF_TOLERANCE,
  W1D_LEVEL_OUT_OF_RANGE,
  W1D_DOMAIN_MISMATCH,
  W1D_INVALID_INTERVAL_ISOMETRY,
  W1D_TOO_MANY_ATOMS,
  W1D_NOT_DISCRETE,
  W1D_INVALID_P,
  W1D_NOT_MONOTONE,
  W1D_STEP_OUT_OF_RANGE,
  W1D_SCOPE_MISMATCH,
  W1D_Q_OUT_OF_RANGE,
  W1D_UNSORTED_POSITIONS,
  W1D_POSITION_OUT_OF_RANGE,
  W1D_ALPHA_OUT_OF_RANGE,
  W1D_WEIGHT_ERROR,
  W1D_EQUAL_ENDPOINTS,
  W1D_NOT_BISECTABLE,
  W1D_INVALID_ARGUMENT,
  W1D_PARSE_ERROR,
  W1D_UNKNOWN_SUITE,
  W1D_INTERNAL_ERROR
} w1d_status;

typedef struct w1d_measure w1d_measure;
typedef struct w1d_isometry w1d_isometry;

/* Name of a status code, e.g. "ScopeMismatch". Static storage. */
WASS1D_API const char* w1d_status_name(w1d_status status);

/* Message of the last failing call on this thread; "" if none. Valid until
   the next call into the library on the same thread. */
WASS1D_API const char* w1d_last_error(void);

/* Strings returned through char** outputs are owned by the caller. */
WASS1D_API void w1d_string_free(char* text);

/* Measures */
WASS1D_API w1d_status w1d_measure_from_json(const char* json, w1d_measure** out);
WASS1D_API w1d_status w1d_measure_to_json(const w1d_measure* mu, char** out);
WASS1D_API void w1d_measure_free(w1d_measure* mu);

WASS1D_API w1d_status w1d_distance(const w1d_measure* mu, const w1d_measure* nu, double p,
                                   double* out);

/* Isometries */
WASS1D_API w1d_status w1d_isometry_from_json(const char* json, w1d_isometry** out);
WASS1D_API void w1d_isometry_free(w1d_isometry* iso);
WASS1D_API w1d_status w1d_apply(const w1d_isometry* iso, const w1d_measure* mu,
                                w1d_measure** out);

/* Verification suites. `csv` receives the report table with a header row and
   `summary` one line per claim; either may be NULL. `passed` is 1 iff every
   claim passed. trials <= 0 selects the suite default. */
WASS1D_API size_t w1d_suite_count(void);
WASS1D_API const char* w1d_suite_id(size_t index);
WASS1D_API w1d_status w1d_verify(const char* suite_id, int trials, uint64_t seed, char** csv,
                                 char** summary, int* passed);

/* Generators; each writes a JSON array of measures. */
WASS1D_API w1d_status w1d_generate_qn(int n, char** out);
WASS1D_API w1d_status w1d_generate_mn_random(int n, uint64_t seed, char** out);
WASS1D_API w1d_status w1d_generate_slice_extremal(double t, char** out);
WASS1D_API w1d_status w1d_generate_two_point(double x, double sigma, double p, char** out);

#ifdef __cplusplus
}
#endif

#endif

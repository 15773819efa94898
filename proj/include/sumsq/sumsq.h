#ifndef SUMSQ_SUMSQ_H
#define SUMSQ_SUMSQ_H

#include <stddef.h>

#if defined(_WIN32)
#define SUMSQ_API __declspec(dllexport)
#else
#define SUMSQ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every call returns a status. On failure the out-parameters are left
   untouched and sumsq_last_error() describes the problem (per thread). */
typedef enum sumsq_status {
    SUMSQ_OK = 0,
    SUMSQ_ERR_NON_UNIT = 1,
    SUMSQ_ERR_GRID = 2,
    SUMSQ_ERR_BRIDGE = 3,
    SUMSQ_ERR_DOMAIN = 4,
    SUMSQ_ERR_LENGTH = 5,
    SUMSQ_ERR_DEGENERATE = 6,
    SUMSQ_ERR_REGISTRY = 7,
    SUMSQ_ERR_DIVISOR = 8,
    SUMSQ_ERR_ARGUMENT = 9, /* null pointer or index out of range */
    SUMSQ_ERR_INTERNAL = 10
} sumsq_status;

SUMSQ_API const char* sumsq_status_name(sumsq_status s);
SUMSQ_API const char* sumsq_last_error(void);

/* Strings handed out by the library are freed with sumsq_string_free. */
SUMSQ_API void sumsq_string_free(char* s);

/* ---- truncated q-series on the quarter grid ---- */

typedef struct sumsq_series sumsq_series;

/* theta2 | theta3 | theta4 | triangle raised to power; transform is
   plain | minus-q | q2 | sqrt-q. order counts quarter units. */
SUMSQ_API sumsq_status sumsq_series_theta(const char* name, unsigned power, const char* transform, long order,
                                          sumsq_series** out);
/* Named Lambert family (V, U, G, R, C, D, T, N, That, Chat, Ttilde) with index s. */
SUMSQ_API sumsq_status sumsq_series_family(const char* name, unsigned s, const char* transform, long order,
                                           sumsq_series** out);
SUMSQ_API sumsq_status sumsq_series_from_json(const char* json, sumsq_series** out);
SUMSQ_API long sumsq_series_order(const sumsq_series* s);
/* Coefficient of x^e (x = q^{1/4}) as a decimal fraction string. */
SUMSQ_API sumsq_status sumsq_series_coeff(const sumsq_series* s, long e, char** out);
SUMSQ_API sumsq_status sumsq_series_to_json(const sumsq_series* s, char** out);
SUMSQ_API void sumsq_series_free(sumsq_series* s);

/* ---- verification reports ---- */

typedef struct sumsq_reports sumsq_reports;

/* One identity by id. n is ignored by fixed identities; for the
   elliptic Lambert ids it is m, for determinant evaluations the largest size. */
SUMSQ_API sumsq_status sumsq_verify_id(const char* id, int n, long order, sumsq_reports** out);
/* A whole group at n, ids in lexicographic order. */
SUMSQ_API sumsq_status sumsq_verify_suite(const char* suite, int n, long order, int jobs, sumsq_reports** out);
/* Suite names, newline separated. */
SUMSQ_API sumsq_status sumsq_suite_names(char** out);
SUMSQ_API size_t sumsq_reports_count(const sumsq_reports* r);
SUMSQ_API int sumsq_reports_all_pass(const sumsq_reports* r);
SUMSQ_API sumsq_status sumsq_reports_pass(const sumsq_reports* r, size_t i, int* pass);
SUMSQ_API sumsq_status sumsq_reports_line(const sumsq_reports* r, size_t i, char** out);
SUMSQ_API sumsq_status sumsq_reports_json(const sumsq_reports* r, size_t i, char** out);
SUMSQ_API void sumsq_reports_free(sumsq_reports* r);

/* ---- counts and arithmetic functions, decimal strings ---- */

/* r_s(N) by method oracle | formula | theta | schur. */
SUMSQ_API sumsq_status sumsq_rs(int s, long N, const char* method, char** out);
/* t_s(N), sums of s triangular numbers, by method oracle | theta | schur. */
SUMSQ_API sumsq_status sumsq_ts(int s, long N, const char* method, char** out);
/* tau(n) by method eta | eq_1_15 | eq_1_29 | eq_1_30 | eq_1_31 | eq_1_32 | eq_1_33. */
SUMSQ_API sumsq_status sumsq_tau(long n, const char* method, char** out);

/* ---- continued fractions ---- */

/* Level n >= 1 of a closed-form family as JSON
   {"level", "alpha", "beta", "numerator", "denominator"}. */
SUMSQ_API sumsq_status sumsq_cfrac_level(const char* family, int n, char** out);
/* Family names, newline separated. */
SUMSQ_API sumsq_status sumsq_cfrac_families(char** out);

#ifdef __cplusplus
}
#endif

#endif

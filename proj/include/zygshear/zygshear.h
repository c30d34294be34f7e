/* C interface to the zygshear library: Farey shear functions, their Zygmund
 * vector fields, Hilbert transforms, Fourier coefficients and the
 * Weil-Petersson pairing on the once-punctured torus.
 *
 * Every call returns a zs_status. On failure the thread-local last error
 * holds a message and, where known, the offending input field and line.
 * Functions filling caller buffers use the two-call pattern: pass out = NULL
 * to learn the required count. */
#ifndef ZYGSHEAR_H
#define ZYGSHEAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ZYGSHEAR_BUILDING)
#    define ZS_API __declspec(dllexport)
#  else
#    define ZS_API __declspec(dllimport)
#  endif
#else
#  define ZS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum zs_status {
  ZS_OK = 0,
  ZS_ERR_INVALID_ARG = 1,
  ZS_ERR_NOT_FAREY = 2,
  ZS_ERR_DUPLICATE = 3,
  ZS_ERR_PARSE = 4,
  ZS_ERR_DOMAIN = 5,
  ZS_ERR_NO_CONVERGENCE = 6,
  ZS_ERR_OVERFLOW = 7,
  ZS_ERR_BUFFER_TOO_SMALL = 8,
  ZS_ERR_INTERNAL = 9
} zs_status;

ZS_API const char* zs_version(void);
ZS_API const char* zs_status_name(zs_status s);

/* Last error on this thread; empty strings and 0 when none. */
ZS_API const char* zs_last_error(void);
ZS_API const char* zs_last_error_field(void);
ZS_API long zs_last_error_line(void);

/* Extended rational; den = 0 is the point at infinity. */
typedef struct zs_rat {
  int64_t num;
  int64_t den;
} zs_rat;

/* Oriented Farey edge, the base triangle (0, 1, inf) on its left. */
typedef struct zs_edge {
  zs_rat initial;
  zs_rat terminal;
} zs_edge;

/* Tips of Farey order <= max_order, fan indices |n| <= window. */
typedef struct zs_truncation {
  int max_order;
  int64_t window;
} zs_truncation;

typedef struct zs_shear zs_shear;

ZS_API zs_status zs_shear_create(zs_shear** out);
/* {"edges": [{"p": [num, den], "q": [num, den], "value": x}, ...]} */
ZS_API zs_status zs_shear_from_json(const char* text, zs_shear** out);
ZS_API zs_status zs_shear_set(zs_shear* s, zs_rat p, zs_rat q, double value);
ZS_API zs_status zs_shear_size(const zs_shear* s, size_t* out);
/* Support in canonical edge order. */
ZS_API zs_status zs_shear_edges(const zs_shear* s, zs_edge* edges, double* values, size_t cap,
                                size_t* count);
ZS_API void zs_shear_destroy(zs_shear* s);

ZS_API zs_status zs_farey_order(zs_rat p, int* out);
ZS_API zs_status zs_farey_vertices(int max_order, zs_rat* out, size_t cap, size_t* count);
ZS_API zs_status zs_fan_edges(zs_rat tip, int64_t n_lo, int64_t n_hi, zs_edge* out, size_t cap,
                              size_t* count);
/* Row-major [a, b, c, d] of the map sending the fan of inf onto the fan of tip. */
ZS_API zs_status zs_fan_moebius(zs_rat tip, int64_t out[4]);

/* Truncated fan series of the Zygmund field at xs[0..n). */
ZS_API zs_status zs_field_eval(const zs_shear* s, zs_truncation t, const double* xs, size_t n,
                               double* out);
/* C * sum_{i >= n} i e^{-(i-2) delta / 2}, delta the fan separation. */
ZS_API zs_status zs_tail_bound(int n, double C, double* out);

typedef struct zs_zygmund_report {
  double sup;
  zs_rat tip;
  int64_t m;
  int64_t k;
} zs_zygmund_report;

/* sup over support tips, m and 1 <= k <= K of the fan second-difference sums. */
ZS_API zs_status zs_zygmund_check(const zs_shear* s, int64_t K, zs_zygmund_report* out);

typedef enum zs_hilbert_mode {
  ZS_HILBERT_CLOSED = 0, /* edge by edge, exact for finite support */
  ZS_HILBERT_SERIES = 1, /* truncated fan series */
  ZS_HILBERT_ORACLE = 2  /* principal-value quadrature of the series field */
} zs_hilbert_mode;

/* residual may be NULL; it is 0 except in oracle mode. */
ZS_API zs_status zs_hilbert_eval(const zs_shear* s, zs_truncation t, zs_hilbert_mode mode,
                                 const double* xs, size_t n, double* out, double* residual);
/* Shear of the Hilbert transform on the Farey edge (b, d). by_order may be
 * NULL, otherwise it receives t.max_order partial values. */
ZS_API zs_status zs_hilbert_shear(const zs_shear* s, zs_truncation t, zs_rat b, zs_rat d,
                                  double* value, double* by_order);

typedef enum zs_delta_route { ZS_DELTA_BRACKET = 0, ZS_DELTA_HYPERBOLIC = 1 } zs_delta_route;
/* Δ-weight of the geodesic (e[0], e[1]) on the quadrilateral q[0..3] (cyclic
 * order, diagonal q[1] q[3]); infinity is HUGE_VAL. */
ZS_API zs_status zs_delta_weight(const double e[2], const double q[4], zs_delta_route route,
                                 double* out);

ZS_API zs_status zs_fourier(const zs_shear* s, zs_truncation t, int64_t n, double* re, double* im);

ZS_API zs_status zs_cusp_condition(const double t[3], int* holds);
ZS_API zs_status zs_wp_pair(const double t1[3], const double t2[3], int depth, double* out);

typedef struct zs_wp_gram_result {
  double basis[2][3];
  double gram[2][2];
  double gram_prev[2][2]; /* at depth - 1 */
  double eigenvalues[2];  /* ascending */
  double asymmetry;
} zs_wp_gram_result;

ZS_API zs_status zs_wp_gram(int depth, zs_wp_gram_result* out);

#ifdef __cplusplus
}
#endif

#endif

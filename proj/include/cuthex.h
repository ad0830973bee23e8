/*
 * cuthex - exact determinantal analysis of lozenge tilings of cut hexagons.
 *
 * C surface over the C++ core: opaque handles, integer status codes, and
 * library-allocated strings (release with cuthex_free). Exact quantities are
 * returned as canonical "num/den" fraction strings; nothing is rounded.
 *
 * Status codes: 0 success, 1 verification failure, 2 malformed/inconsistent
 * specification. On any NULL/nonzero failure the message is available from
 * cuthex_last_error() (thread-local).
 */
#ifndef CUTHEX_H
#define CUTHEX_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CUTHEX_OK 0
#define CUTHEX_FAIL 1
#define CUTHEX_SPEC_ERROR 2

typedef struct cuthex_polygon cuthex_polygon;

const char* cuthex_version(void);
const char* cuthex_last_error(void);
void cuthex_free(char* s);

/* Polygon specification: JSON object with lower_cuts, lower_gaps, upper_cuts,
 * upper_gaps (integer arrays) and b0, bu, d0 (integers). */
cuthex_polygon* cuthex_polygon_parse(const char* spec_json);
void cuthex_polygon_free(cuthex_polygon* p);
char* cuthex_polygon_describe(const cuthex_polygon* p); /* JSON of derived data */

char* cuthex_count_tilings(const cuthex_polygon* p); /* decimal integer string */
/* CSV rows "tiling,level,x1,x2,..."; cap bounds the enumeration size. */
char* cuthex_enumerate_csv(const cuthex_polygon* p, long cap);

/* points_csv holds semicolon-separated "level:x" pairs (red) or "eta:xi"
 * (blue); q_or_null selects the q-weighted measure ("1/2") or uniform. */
char* cuthex_red_correlation(const cuthex_polygon* p, const char* points_csv,
                             const char* q_or_null);
char* cuthex_blue_correlation(const cuthex_polygon* p, const char* points_csv,
                              const char* q_or_null);

/* form: "d2" | "R" | "L" | "r3". */
char* cuthex_kernel_red(const cuthex_polygon* p, const char* form, long m, long x, long n, long y);
/* route: "matrix" | "integral"; q as a fraction string in (0,1). */
char* cuthex_kernel_q(const cuthex_polygon* p, const char* q, const char* route, long m, long x,
                      long n, long y);
char* cuthex_kernel_blue(const cuthex_polygon* p, long eta, long xi, long eta2, long xi2);
/* Max |det L_blue - enumerated blue correlation| over all 1- and 2-point sets
 * (exact fraction; "0" certifies the shift relation on this polygon). */
char* cuthex_verify_thm2(const cuthex_polygon* p);

/* Discrete tacnode kernel with quadrature parameters (pass 0 for defaults). */
int cuthex_tacnode(int r, int rho, double beta, double a, double T, double h, int circle_n,
                   long tau1, double theta1, long tau2, double theta2, double* re, double* im);
int cuthex_tacnode_involution(int r, int rho, double beta, double a, double T, double h,
                              int circle_n, long tau1, double theta1, long tau2, double theta2,
                              double* residual);

long long cuthex_default_steps(const cuthex_polygon* p);
/* Metropolis sample after `steps` proposals from the named seeded generator;
 * returns the tiling as level CSV. */
char* cuthex_sample_csv(const cuthex_polygon* p, unsigned long long seed, long long steps,
                        const char* q_or_null);
/* flags: 1 red dots, 2 blue dots, 4 strip guides. tiling_csv NULL renders the
 * minimal tiling. */
char* cuthex_render_svg(const cuthex_polygon* p, const char* tiling_csv, int scale, int flags);

/* Runs the exact acceptance suite; returns CUTHEX_OK / CUTHEX_FAIL and the
 * pass/fail table in *report when non-NULL. */
int cuthex_selftest(char** report);

#ifdef __cplusplus
}
#endif

#endif /* CUTHEX_H */

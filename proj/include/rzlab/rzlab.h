#ifndef RZLAB_RZLAB_H
#define RZLAB_RZLAB_H

/*
 * C interface to the rzlab core: exact rational-function algebra, root
 * counting for differential polynomials, bound checks, zero census,
 * parabolic-petal analysis, basin rasters, the closed-form examples and
 * seeded fuzz campaigns.
 *
 * Conventions
 *  - Every entry point returns an rz_status.
 *  - Reports are JSON documents (schema 1) returned through a char**;
 *    release them with rz_free_string. On failure the same pointer
 *    receives an error object {"schema":1,"error":{...}}.
 *  - Checks that ran to completion but found the property false return
 *    RZ_VIOLATION with a full report.
 *  - The last error message of the calling thread is available from
 *    rz_last_error_message.
 *  - Calls are not reentrant across threads: multiprecision working
 *    precision is process-wide. Serialize calls.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RZLAB_BUILDING_LIBRARY)
#    define RZ_API __declspec(dllexport)
#  else
#    define RZ_API __declspec(dllimport)
#  endif
#else
#  define RZ_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rz_status {
  RZ_OK = 0,
  RZ_VIOLATION = 1,       /* a checked property failed */
  RZ_PARSE_ERROR = 2,     /* malformed input text */
  RZ_DOMAIN_ERROR = 3,    /* input violates a precondition */
  RZ_NUMERIC_ERROR = 4,   /* root finding did not converge within the precision cap */
  RZ_INVALID_ARGUMENT = 5,/* null pointer, unknown name, bad numeric option */
  RZ_INTERNAL_ERROR = 6
} rz_status;

/* Opaque exact rational function with rational coefficients. */
typedef struct rz_function rz_function;

/* Run configuration shared by the numeric entry points. */
typedef struct rz_config rz_config;

RZ_API const char* rz_version(void);
RZ_API const char* rz_status_name(rz_status status);

/* Message of the last failure on this thread ("" when none). */
RZ_API const char* rz_last_error_message(void);
/* Character offset of the last parse error, or -1. */
RZ_API long rz_last_error_position(void);

RZ_API void rz_free_string(char* text);
RZ_API void rz_free_buffer(unsigned char* buffer);

/* ---- functions ---------------------------------------------------- */

/* Expression in z ("z - z^3/3", "(z+1)/(z-1)") or coefficient form
 * "2,8,-16" / "num ; den" with ascending coefficients. */
RZ_API rz_status rz_function_parse(const char* text, rz_function** out);
RZ_API void rz_function_free(rz_function* fn);
/* Normalized expression text. */
RZ_API rz_status rz_function_to_string(const rz_function* fn, char** out);
RZ_API int rz_function_degree(const rz_function* fn);

/* kind "F": z - 1/f(z/(k-1))^(k-1); kind "G": z - g^(k+1)/(k+1).
 * *degenerate (optional) is set when the map's derivative vanishes. */
RZ_API rz_status rz_build_aux(const rz_function* fn, const char* kind, int k,
                              rz_function** out, int* degenerate);

/* mode "hayman": f' + f^k + c; mode "product": f^k f' - c. */
RZ_API rz_status rz_differential_poly(const rz_function* fn, const char* mode, int k, const char* c,
                                      rz_function** out);

/* ---- configuration ------------------------------------------------ */

RZ_API rz_config* rz_config_new(void);
RZ_API void rz_config_free(rz_config* config);
RZ_API rz_status rz_config_set_seed(rz_config* config, uint64_t seed);
RZ_API rz_status rz_config_set_precision(rz_config* config, int bits);
RZ_API rz_status rz_config_set_max_bits(rz_config* config, int bits);
RZ_API rz_status rz_config_set_trials(rz_config* config, int trials);
RZ_API rz_status rz_config_set_max_iter(rz_config* config, long max_iter);
RZ_API rz_status rz_config_set_tau_real(rz_config* config, double tau);
RZ_API rz_status rz_config_set_angle_tol(rz_config* config, double tol);
RZ_API rz_status rz_config_set_capture_radius(rz_config* config, double radius);
RZ_API rz_status rz_config_set_escape_radius(rz_config* config, double radius);
RZ_API rz_status rz_config_set_include_roots(rz_config* config, int include);

/* ---- reports ------------------------------------------------------ */

/* check: "sheilsmall" (uses m), "inversion" (m, c), "tc0" (m, c; relaxed
 * allows m >= 1). c is a rational literal and may be NULL for "0". */
RZ_API rz_status rz_identity_check(const rz_function* fn, const char* check, int m, const char* c,
                                   int relaxed, char** json);

/* Roots of the numerator with multiplicities and classification, plus the
 * exact Sturm count of distinct real roots. */
RZ_API rz_status rz_zeros(const rz_function* fn, const rz_config* config, char** json);

/* Differential polynomial of f(z) = R(tan(bz)), text "R = <ratfun> ; b = <q>".
 * mode "hayman" (f' + f^k + c) or "product" (f^k f' - c). */
RZ_API rz_status rz_tan_zeros(const char* tanfun, const char* mode, int k, const char* c,
                              const rz_config* config, char** json);

/* theorem: cor1, thm_rat, cor_crat, thm4pol, thm9_rat. With
 * enforce_hypotheses == 0 a failed hypothesis is reported, not raised. */
RZ_API rz_status rz_check_bound(const char* theorem, const rz_function* fn, int k, const char* c,
                                int enforce_hypotheses, const rz_config* config, char** json);

RZ_API rz_status rz_census(const rz_function* g, char** json);
RZ_API rz_status rz_rolle_check(const rz_function* g, const char* shift, char** json);

/* Parabolic points, predicted angles, critical orbits and petal summary. */
RZ_API rz_status rz_petals(const rz_function* map, const rz_config* config, char** json);

/* PPM (P6) raster of petal membership; *ppm is released with
 * rz_free_buffer. json (optional) receives raster statistics. */
RZ_API rz_status rz_basin(const rz_function* map, double center_re, double center_im, double width,
                          double height, int resolution, const rz_config* config,
                          unsigned char** ppm, size_t* ppm_size, char** json);

RZ_API rz_status rz_examples(char** json);

/* suite: thm_rat, thm4pol, thm9_rat, cor_crat, cor1, oracle, census,
 * petals, negative_controls, all. */
RZ_API rz_status rz_fuzz(const char* suite, const rz_config* config, char** json);

#ifdef __cplusplus
}
#endif

#endif /* RZLAB_RZLAB_H */

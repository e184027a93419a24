#ifndef TOROIDAL_TOROIDAL_H
#define TOROIDAL_TOROIDAL_H

/* C interface to the toroidalization library. Every operation returns a
 * status code and stores its report in an opaque result handle, which the
 * caller releases with toroidal_result_free. Reports are JSON (or DOT for
 * chart trees); on failure the handle carries the error message. */

#include <stdint.h>

#if defined(TOROIDAL_BUILDING_LIBRARY)
#define TOROIDAL_API __attribute__((visibility("default")))
#else
#define TOROIDAL_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum toroidal_status {
  TOROIDAL_OK = 0,
  TOROIDAL_MALFORMED_GERM = 1,
  TOROIDAL_NOT_A_SUBLATTICE = 2,
  TOROIDAL_TRUNCATION_INSUFFICIENT = 3,
  TOROIDAL_NON_UNIMODULAR = 4,
  TOROIDAL_INVALID_CENTER_FORM = 5,
  TOROIDAL_STEP_BUDGET_EXCEEDED = 6,
  TOROIDAL_NOT_A_FACE = 7,
  TOROIDAL_NOT_A_CONE = 8,
  TOROIDAL_INVALID_PRE_RELATION = 9,
  TOROIDAL_PARSE_ERROR = 10,
  TOROIDAL_INVALID_ARGUMENT = 11,
  TOROIDAL_INTERNAL_ERROR = 100
} toroidal_status;

typedef enum toroidal_format { TOROIDAL_FORMAT_JSON = 0, TOROIDAL_FORMAT_DOT = 1 } toroidal_format;

typedef struct toroidal_germ toroidal_germ;
typedef struct toroidal_fan toroidal_fan;
typedef struct toroidal_result toroidal_result;

TOROIDAL_API const char* toroidal_version(void);
/* Stable name of a status, e.g. "MalformedGerm". */
TOROIDAL_API const char* toroidal_status_name(int status);

TOROIDAL_API const char* toroidal_result_text(const toroidal_result* result);
TOROIDAL_API int toroidal_result_status(const toroidal_result* result);
TOROIDAL_API void toroidal_result_free(toroidal_result* result);

/* Germ handles. Series without an explicit "trunc" get `default_trunc`. */
TOROIDAL_API int toroidal_germ_parse(const char* json, int64_t default_trunc,
                                     toroidal_germ** out, toroidal_result** error);
TOROIDAL_API void toroidal_germ_free(toroidal_germ* germ);

/* Fan handles: {"rays": [...], "cones": [...], "divisors": [{"coeffs": [...]}]} */
TOROIDAL_API int toroidal_fan_parse(const char* json, toroidal_fan** out,
                                    toroidal_result** error);
TOROIDAL_API void toroidal_fan_free(toroidal_fan* fan);

TOROIDAL_API int toroidal_classify(const toroidal_germ* germ, toroidal_result** out);
TOROIDAL_API int toroidal_tau(const toroidal_germ* germ, toroidal_result** out);
TOROIDAL_API int toroidal_lambda(const toroidal_germ* germ, toroidal_result** out);

/* Domain blow-up charts of a center ("2curve", "2pt", "3pt", "curve").
 * `translations` lists rational constants ("p/q") for translated charts. */
TOROIDAL_API int toroidal_blowup_domain(const toroidal_germ* germ, const char* center,
                                        const char* const* translations, int n_translations,
                                        toroidal_result** out);
/* Target blow-up charts of a center in local form 1, 2 or 3. Charts the
 * germ does not lift to are reported with "lifts": false. */
TOROIDAL_API int toroidal_blowup_target(const toroidal_germ* germ, int center_form,
                                        toroidal_result** out);

TOROIDAL_API int toroidal_resolve3(int64_t a, int64_t b, int64_t c, const char* lambda,
                                   int max_steps, toroidal_format format, toroidal_result** out);

/* strategy: "pair" (pairwise reduction) or "mixed" (2-cones and 3-cones).
 * budget <= 0 selects the default round budget. */
TOROIDAL_API int toroidal_principalize(const toroidal_fan* fan, const char* strategy, int budget,
                                       toroidal_result** out);

/* Runs the acceptance suites. `only` selects criterion ids (all when
 * n_only is 0). Returns TOROIDAL_OK even when criteria fail; read the
 * report's summary. */
TOROIDAL_API int toroidal_suite(uint64_t seed, int64_t trunc, const char* const* only,
                                int n_only, toroidal_result** out);

#ifdef __cplusplus
}
#endif

#endif

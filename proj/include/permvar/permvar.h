/* C interface to the permvar library.
 *
 * Every call returns a pv_status. On failure the message is available from
 * pv_last_error() in the calling thread until its next failing call.
 * Strings returned through char** are owned by the caller and released with
 * pv_string_free(). Structured results are JSON text.
 *
 * Coefficient domains are "QQ", "ZZ" or "GF(p)"; orders are "degrevlex",
 * "lex" or "block(c)". Polynomials use the canonical text form, one per line
 * in lists. */
#ifndef PERMVAR_H
#define PERMVAR_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define PV_API __declspec(dllexport)
#else
#define PV_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pv_status {
  PV_OK = 0,
  PV_ERR_STRUCTURAL = 1,
  PV_ERR_CAPACITY = 2,
  PV_ERR_TIMEOUT = 3,
  PV_ERR_PRECONDITION = 4,
  PV_ERR_PARSE = 5,
  PV_ERR_INTERNAL = 6,
  PV_ERR_NOT_FOUND = 7,
  PV_ERR_INVALID_ARGUMENT = 8
} pv_status;

typedef struct pv_config pv_config;
typedef struct pv_ideal pv_ideal;
typedef struct pv_gb pv_gb;

PV_API const char* pv_version(void);
PV_API const char* pv_status_name(pv_status s);
PV_API const char* pv_last_error(void);
PV_API void pv_string_free(char* s);

/* ---- run configuration -------------------------------------------------- */

/* Defaults: primes 2147483647 and 1073741789, degrevlex, seed 20240101,
 * timeout 600 s, default tier. */
PV_API pv_status pv_config_new(pv_config** out);
PV_API void pv_config_free(pv_config* cfg);
PV_API pv_status pv_config_set_primes(pv_config* cfg, uint64_t prime, uint64_t prime2);
PV_API pv_status pv_config_set_order(pv_config* cfg, const char* order);
PV_API pv_status pv_config_set_seed(pv_config* cfg, uint64_t seed);
PV_API pv_status pv_config_set_timeout(pv_config* cfg, double seconds);
PV_API pv_status pv_config_set_tier(pv_config* cfg, const char* tier);
/* Case parameter overrides as a JSON object, e.g. {"n": 5}. */
PV_API pv_status pv_config_set_overrides(pv_config* cfg, const char* json);
/* Reads any of prime, prime2, order, seed, timeout, tier from a JSON object. */
PV_API pv_status pv_config_merge_json(pv_config* cfg, const char* json);
PV_API pv_status pv_config_to_json(const pv_config* cfg, char** out);

/* ---- numeric matrices (JSON arrays of rows; integers or "p/q" strings) -- */

/* Permanent over QQ, or modulo p when p != 0. */
PV_API pv_status pv_permanent(const char* matrix_json, uint64_t p, char** out);
PV_API pv_status pv_prk(const char* matrix_json, size_t* out);
PV_API pv_status pv_kirkup_matrix(size_t k, char** matrix_json);
/* mode is "B1" or "L". */
PV_API pv_status pv_derivative_matrix(const char* matrix_json, const char* mode, char** matrix_json_out);
PV_API pv_status pv_classify_type(const char* matrix_json, const char* mode, char** report_json);
/* qs_json is a list of vectors: one for B1, two for L. */
PV_API pv_status pv_kernel_extension(const char* matrix_json, const char* mode, const char* qs_json, int* out);

/* ---- ideals and Groebner bases ----------------------------------------- */

/* Generators from text; the ring holds every variable that appears. */
PV_API pv_status pv_ideal_parse(const char* text, const char* order, const char* domain, pv_ideal** out);
/* h x h permanents of a k x n matrix; pattern is "generic", "hankel" or
 * "circulant" (period 0 means n); h = 0 means k. */
PV_API pv_status pv_ideal_permanental(size_t k, size_t n, size_t h, const char* pattern, size_t period,
                                      const char* order, const char* domain, pv_ideal** out);
PV_API void pv_ideal_free(pv_ideal* ideal);
PV_API size_t pv_ideal_size(const pv_ideal* ideal);
PV_API pv_status pv_ideal_to_text(const pv_ideal* ideal, char** out);
/* {"ring": ..., "gens": [...]} */
PV_API pv_status pv_ideal_to_json(const pv_ideal* ideal, char** out);
PV_API pv_status pv_ideal_saturate(const pv_ideal* ideal, const char* f, double timeout_s, pv_ideal** out);

PV_API pv_status pv_groebner(const pv_ideal* ideal, double timeout_s, pv_gb** out);
PV_API void pv_gb_free(pv_gb* gb);
PV_API size_t pv_gb_size(const pv_gb* gb);
PV_API pv_status pv_gb_to_text(const pv_gb* gb, char** out);
PV_API pv_status pv_gb_stats(const pv_gb* gb, char** json);
/* {"dim", "codim", "degree", "independent_set"} */
PV_API pv_status pv_gb_dimension(const pv_gb* gb, char** json);
PV_API pv_status pv_gb_normal_form(const pv_gb* gb, const char* poly, char** out);

/* ---- experiments -------------------------------------------------------- */

/* Bound from a named slice ("circulant3", "hankel2xn:5", ...) applied to
 * the h x h permanents of the generic matrix of the slice's shape. */
PV_API pv_status pv_slice_bound(const char* slice, size_t h, const pv_config* cfg, char** json);
PV_API pv_status pv_census(size_t n, const pv_config* cfg, char** report_json);

/* JSON array of {"id", "criterion", "tier", "claim"}. */
PV_API pv_status pv_case_list(char** json);
PV_API pv_status pv_reproduce(const char* case_id, const pv_config* cfg, char** report_json);

typedef void (*pv_report_fn)(const char* report_json, void* user);
/* Calls fn once per registered case in order; *passed is 1 iff no case
 * failed (skipped cases do not count as failures). */
PV_API pv_status pv_reproduce_all(const pv_config* cfg, pv_report_fn fn, void* user, int* passed);

#ifdef __cplusplus
}
#endif

#endif

/* C API for the proportionally modular / numerical semigroup library.
 *
 * All functions return PSM_OK on success. On failure they return a status
 * code and leave a message retrievable with psm_last_error() (thread-local).
 * Strings returned through char** out parameters are heap-allocated and
 * must be released with psm_string_free().
 */
#ifndef PSM_H
#define PSM_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  PSM_OK = 0,
  PSM_ERR_DOMAIN = 1,   /* precondition violated */
  PSM_ERR_PARSE = 2,    /* malformed "p/q" / "inf" input */
  PSM_ERR_CAPACITY = 3, /* configured cap exceeded */
  PSM_ERR_OVERFLOW = 4, /* exact arithmetic out of range */
  PSM_ERR_INTERNAL = 5  /* broken internal invariant (bug) */
} psm_status;

/* Opaque numerical semigroup descriptor. */
typedef struct psm_semigroup psm_semigroup;

const char* psm_last_error(void);
void psm_string_free(char* s);

/* --- construction / destruction ------------------------------------- */

psm_status psm_semigroup_from_generators(const long long* gens, size_t count,
                                         psm_semigroup** out);
psm_status psm_semigroup_from_ap(long long a, long long d, long long k,
                                 psm_semigroup** out);
psm_status psm_semigroup_from_pm(long long a, long long b, long long c,
                                 psm_semigroup** out);
/* Endpoints as "p/q" or integer strings; hi may be "inf". */
psm_status psm_semigroup_from_interval(const char* lo, const char* hi,
                                       psm_semigroup** out);
void psm_semigroup_free(psm_semigroup* s);

/* --- accessors -------------------------------------------------------- */

long long psm_semigroup_frobenius(const psm_semigroup* s);
long long psm_semigroup_genus(const psm_semigroup* s);
long long psm_semigroup_multiplicity(const psm_semigroup* s);
size_t psm_semigroup_gap_count(const psm_semigroup* s);
/* out must hold psm_semigroup_gap_count entries */
void psm_semigroup_gaps(const psm_semigroup* s, long long* out);
size_t psm_semigroup_generator_count(const psm_semigroup* s);
void psm_semigroup_generators(const psm_semigroup* s, long long* out);
int psm_semigroup_contains(const psm_semigroup* s, long long x);
psm_status psm_semigroup_to_json(const psm_semigroup* s, char** out_json);

/* --- command-level results (JSON strings, as printed by the CLI) ----- */

psm_status psm_gaps_json(long long a, long long d, long long k, char** out_json);
psm_status psm_frobenius_json(long long a, long long d, long long k, char** out_json);
psm_status psm_from_interval_json(const char* lo, const char* hi, char** out_json);
psm_status psm_from_pm_json(long long a, long long b, long long c, char** out_json);
psm_status psm_pm_dual_json(long long a, long long b, long long c, char** out_json);
psm_status psm_interval_dual_json(const char* lo, const char* hi, char** out_json);
psm_status psm_bezout_json(const char* lo, const char* hi, char** out_json);
psm_status psm_is_pm_json(const long long* gens, size_t count, char** out_json);
psm_status psm_characterize_json(long long a, long long d, long long k,
                                 char** out_json);
psm_status psm_characterize_point(long long a, long long d, long long k,
                                  const char* alpha, const char* beta,
                                  int* inside);
psm_status psm_triple_regions_json(long long a, long long d, long long k,
                                   long long m, char** out_json);
psm_status psm_characterize_triple(long long a, long long d, long long k,
                                   long long p, long long m, long long q,
                                   int* inside);
/* Verification sweep; returns JSON lines, one record per grid point. */
psm_status psm_verify_json(long long a_max, long long d_max,
                           long long denom_bound, long long triple_bound,
                           char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* PSM_H */

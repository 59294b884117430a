/* C interface to the homok library. Every call returns a status code; on
 * failure homok_last_error() describes the problem. Strings returned through
 * char** out-parameters are owned by the caller and released with homok_free.
 * Structured results are JSON documents. */
#ifndef HOMOK_HOMOK_H
#define HOMOK_HOMOK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define HOMOK_API
#else
#define HOMOK_API __attribute__((visibility("default")))
#endif

typedef enum homok_status {
  HOMOK_OK = 0,
  HOMOK_ERR_PARSE = 1,
  HOMOK_ERR_INVALID_ARGUMENT = 2,
  HOMOK_ERR_CAP_EXCEEDED = 3,
  HOMOK_ERR_NOT_STABILIZED = 4,
  HOMOK_ERR_OVERFLOW = 5,
  HOMOK_ERR_COMPUTE = 6,
  HOMOK_ERR_IO = 7,
  HOMOK_ERR_NULL_ARGUMENT = 8,
  HOMOK_ERR_INTERNAL = 9
} homok_status;

typedef struct homok_group homok_group;

HOMOK_API const char* homok_version(void);
HOMOK_API const char* homok_status_name(homok_status status);
/* Message of the last failed call on this thread; "" if none. */
HOMOK_API const char* homok_last_error(void);
HOMOK_API void homok_free(char* s);
/* Extra self-checks inside the library (process-wide). */
HOMOK_API void homok_set_debug_checks(int enabled);

/* order_cap <= 0 selects the default cap of 100000 elements. */
HOMOK_API homok_status homok_group_create(const char* spec, int64_t order_cap, homok_group** out);
HOMOK_API void homok_group_destroy(homok_group* group);
HOMOK_API homok_status homok_group_order(const homok_group* group, int64_t* out);
HOMOK_API homok_status homok_group_canonical_spec(const homok_group* group, char** out);
/* Invariants, order, exponent, q(G) and the cyclic subgroups. */
HOMOK_API homok_status homok_group_describe(const homok_group* group, char** json_out);

HOMOK_API homok_status homok_higher_order(int64_t d, int64_t k, int64_t* out);
/* Decimal string of the gcd oracle value. */
HOMOK_API homok_status homok_higher_order_oracle(int64_t d, int64_t k, char** decimal_out);
HOMOK_API homok_status homok_higher_order_report(int64_t d, int64_t k, int with_oracle, char** json_out);

HOMOK_API homok_status homok_graded_bracket(const homok_group* group, int64_t d, char** json_out);
/* target: NULL or "QZ" for Q/Z, "Z" for the integers, else a group spec. */
HOMOK_API homok_status homok_hmg(const homok_group* group, int64_t d, const char* target, char** json_out);
HOMOK_API homok_status homok_cocyclic(const homok_group* group, char** json_out);
HOMOK_API homok_status homok_sk1(const homok_group* group, char** json_out);

/* Homogeneity report and coordinates of a function table document
 * {"group", "degree", "values"}. */
HOMOK_API homok_status homok_table_inspect(const char* table_json, char** json_out);
/* Table of the homomorphism G[d] -> Q/Z with the given coordinates
 * ([[num, den], ...] per cyclic subgroup). */
HOMOK_API homok_status homok_table_from_coordinates(const homok_group* group, int64_t d, const char* coords_json,
                                                    char** table_json_out);

/* Transfer job {"d", "source", "target", "t_values", "f_coords"}. */
HOMOK_API homok_status homok_transfer(const char* job_json, int64_t order_cap, char** json_out);

/* options_json may be NULL; keys: kmax, dmax, seed, max_order, trials. A
 * failing suite still returns HOMOK_OK with *passed_out = 0. */
HOMOK_API homok_status homok_verify(const char* suite, const char* options_json, int* passed_out, char** json_out);

/* CSV text, plus a JSON array of reasons for rows left out. */
HOMOK_API homok_status homok_table_generate(const char* family, const char* primes, int64_t order_cap,
                                            char** csv_out, char** skipped_json_out);

#ifdef __cplusplus
}
#endif

#endif

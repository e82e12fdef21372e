#ifndef LUCAS_SERIES_H
#define LUCAS_SERIES_H

/*
 * C interface to the Lucas series library.
 *
 * Every function returns a lucas_status. On failure the message is available
 * from lucas_last_error() (per thread, valid until the next call on that
 * thread). Results are returned as lucas_text handles holding UTF-8 JSON
 * (or CSV where noted); release them with lucas_text_free.
 *
 * Rationals cross the boundary as strings: "p", "p/q", "-1.25", "1e-30".
 */

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  LUCAS_OK = 0,
  LUCAS_INVALID_ARGUMENT = 1,  /* malformed input or parameters */
  LUCAS_UNKNOWN_IDENTITY = 2,  /* no catalog record with that id */
  LUCAS_HYPOTHESIS = 3,        /* a theorem's hypothesis fails */
  LUCAS_ZERO_DENOMINATOR = 4,  /* some U_m in a denominator vanishes */
  LUCAS_TERM_LIMIT = 5,        /* certified truncation exceeds max_terms */
  LUCAS_INTERNAL = 6
} lucas_status;

typedef struct lucas_params lucas_params;
typedef struct lucas_text lucas_text;

const char* lucas_last_error(void);
const char* lucas_status_name(lucas_status status);

const char* lucas_text_data(const lucas_text* text);
void lucas_text_free(lucas_text* text);

/* (P, Q) with P != 0, Q != 0, P^2 - 4Q > 0. */
lucas_status lucas_params_new(const char* p, const char* q, lucas_params** out);
void lucas_params_free(lucas_params* params);

/* U_n and V_n as exact "p/q" strings; any integer n. */
lucas_status lucas_params_u(const lucas_params* params, int64_t n, lucas_text** out);
lucas_status lucas_params_v(const lucas_params* params, int64_t n, lucas_text** out);

/* Rows {n, u, v} for from <= n <= to. */
lucas_status lucas_seq_json(const lucas_params* params, int64_t from, int64_t to, lucas_text** out);

/*
 * Series evaluation. `request` is a JSON object:
 *   {"p": "1", "q": "-1", "seq": "arith:1,2", "kind": "first", "k": 1, "r": 1,
 *    "eps": "1e-30", "max_terms": 1000000, "check_odd_relation": false}
 * kind: first | first-signed | second-alt | second-plain | sqrt-error | coset | srk
 */
lucas_status lucas_sum_json(const char* request, lucas_text** out);

/* Catalog verification: one id (an instance, a template or a bare name, expanded
 * over the default grid) or every record when id is NULL. */
lucas_status lucas_verify_json(const char* id, const char* eps, int64_t max_terms, lucas_text** out);
lucas_status lucas_verify_csv(const char* id, const char* eps, int64_t max_terms, lucas_text** out);

lucas_status lucas_catalog_json(lucas_text** out);

/* Convergents 0..n of sqrt 5; with_sum adds the three error-sum enclosures. */
lucas_status lucas_convergents_json(int64_t n, const char* eps, int with_sum, lucas_text** out);

/* suite: "fastdouble" or "telescope". CSV rows. */
lucas_status lucas_bench_csv(const char* suite, const lucas_params* params, int64_t n,
                             const char* eps, lucas_text** out);

lucas_status lucas_selftest_json(uint64_t seed, int64_t cases, lucas_text** out);

#ifdef __cplusplus
}
#endif

#endif /* LUCAS_SERIES_H */

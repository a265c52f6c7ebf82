/*
 * C interface to the difference-system library.
 *
 * Every function returning dss_status reports failure through the status
 * and, on the calling thread, a message retrievable with dss_last_error().
 * Objects are opaque handles released with the matching *_free function.
 * Strings returned through char** are heap allocated and released with
 * dss_string_free(). Output handles are only written on success.
 */
#ifndef DSS_DSS_H
#define DSS_DSS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(DSS_BUILDING_LIBRARY)
#    define DSS_API __declspec(dllexport)
#  else
#    define DSS_API __declspec(dllimport)
#  endif
#else
#  define DSS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dss_status {
  DSS_OK = 0,
  DSS_ERR_ELEMENT_OUT_OF_RANGE = 1,
  DSS_ERR_SETS_NOT_DISJOINT = 2,
  DSS_ERR_EMPTY_FAMILY = 3,
  DSS_ERR_NOT_RATE_ONE = 4,
  DSS_ERR_NOT_PRIME = 5,
  DSS_ERR_ORDER_DOES_NOT_DIVIDE = 6,
  DSS_ERR_NOT_COPRIME = 7,
  DSS_ERR_WRONG_RESIDUE_CLASS = 8,
  DSS_ERR_INVALID_PARAMETER = 9,
  DSS_ERR_NOT_ADMISSIBLE = 10,
  DSS_ERR_NO_CLAIM = 11,
  DSS_ERR_INGREDIENT_NOT_PERFECT = 12,
  DSS_ERR_INGREDIENT_NOT_REGULAR = 13,
  DSS_ERR_INGREDIENT_NOT_DF = 14,
  DSS_ERR_NOT_SINGLE_SET = 15,
  DSS_ERR_NOT_DIFFERENCE_SET = 16,
  DSS_ERR_ALPHABET_TOO_SMALL = 17,
  DSS_ERR_PAYLOAD_LENGTH_MISMATCH = 18,
  DSS_ERR_SYMBOL_OUT_OF_RANGE = 19,
  DSS_ERR_LENGTH_MISMATCH = 20,
  DSS_ERR_OFFSET_OUT_OF_RANGE = 21,
  DSS_ERR_PARSE = 22,
  DSS_ERR_INDEX_FORMULA_MISMATCH = 23,
  DSS_ERR_CLAIM_MISMATCH = 24,
  DSS_ERR_VERIFICATION_FAILED = 25,
  DSS_ERR_BUDGET_EXCEEDED = 26,
  DSS_ERR_NULL_ARGUMENT = 100,
  DSS_ERR_INTERNAL = 101
} dss_status;

typedef struct dss_family dss_family;     /* difference system over Z_v */
typedef struct dss_sequence dss_sequence; /* frequency hopping sequence */
typedef struct dss_layout dss_layout;     /* marker layout of a code */

typedef struct dss_report {
  int64_t v;
  uint64_t q;
  uint64_t redundancy;
  uint64_t rate_num, rate_den; /* lowest terms */
  uint64_t index;
  int is_regular;
  int is_perfect;
  int has_df_lambda;
  uint64_t df_lambda;
  int has_bounds; /* 0 when q < 2 */
  uint64_t levenshtein_numerator, levenshtein_denominator;
  double levenshtein_bound;
  uint64_t wang_bound;
  int meets_levenshtein_equality;
} dss_report;

typedef struct dss_bounds {
  int defined; /* 0 when q < 2 */
  double levenshtein_bound;
  uint64_t levenshtein_ceiling;
  uint64_t wang_bound;
} dss_bounds;

typedef struct dss_parameters {
  uint64_t v, m, q, index;
} dss_parameters;

typedef struct dss_sync_stats {
  uint64_t blocks;
  uint64_t offsets_tested;
  uint64_t true_accepts;
  uint64_t false_accepts;
  uint64_t false_rejects;
  uint64_t seed;
} dss_sync_stats;

/* errors and memory */
DSS_API const char* dss_status_name(dss_status status);
DSS_API const char* dss_last_error(void);
DSS_API void dss_string_free(char* s);

/* families: elements holds the sets back to back, set_sizes their lengths */
DSS_API dss_status dss_family_create(int64_t v, const int64_t* elements, const size_t* set_sizes,
                                     size_t set_count, dss_family** out);
DSS_API dss_status dss_family_from_json(const char* json, dss_family** out);
DSS_API dss_status dss_family_to_json(const dss_family* family, char** out);
DSS_API void dss_family_free(dss_family* family);
DSS_API int64_t dss_family_modulus(const dss_family* family);
DSS_API size_t dss_family_set_count(const dss_family* family);
DSS_API uint64_t dss_family_redundancy(const dss_family* family);
/* Copy carrying the verified index as its claim; provenance replaced unless NULL. */
DSS_API dss_status dss_family_with_verified_claim(const dss_family* family, const char* provenance,
                                                  dss_family** out);

/* verification */
DSS_API dss_status dss_verify(const dss_family* family, dss_report* out);
DSS_API dss_status dss_verify_json(const dss_family* family, char** out);
DSS_API dss_status dss_check_claim(const dss_family* family, int* matches);
DSS_API dss_status dss_compute_bounds(int64_t v, uint64_t q, uint64_t rho, dss_bounds* out);

/* constructions */
DSS_API dss_status dss_cyclotomic(uint64_t p, uint64_t f, uint64_t q, dss_family** out);
DSS_API dss_status dss_quartic_pair(uint64_t n, dss_family** out);
DSS_API dss_status dss_sextic_triple(uint64_t n, dss_family** out);
DSS_API dss_status dss_sextic_pair(uint64_t n, dss_family** out);
DSS_API dss_status dss_paley(uint64_t p, uint64_t q, dss_family** out);
DSS_API dss_status dss_qr_difference_set(uint64_t p, dss_family** out);

/* form: "16n2+1", "12n2+1", "108n2+1" (or the series names). Writes up to
 * capacity values and the full count. */
DSS_API dss_status dss_scan_prime_forms(const char* form, uint64_t n_max, uint64_t* values,
                                        size_t capacity, size_t* count);

/* sequences */
DSS_API dss_status dss_sequence_create(size_t alphabet, const uint32_t* symbols, size_t period,
                                       dss_sequence** out);
DSS_API dss_status dss_identity_fhs(size_t v, dss_sequence** out);
DSS_API dss_status dss_cyclotomic_fhs(uint64_t p, uint64_t q, dss_sequence** out);
DSS_API void dss_sequence_free(dss_sequence* seq);
DSS_API size_t dss_sequence_period(const dss_sequence* seq);
DSS_API const uint32_t* dss_sequence_symbols(const dss_sequence* seq);
DSS_API dss_status dss_sequence_to_family(const dss_sequence* seq, dss_family** out);
DSS_API dss_status dss_family_to_sequence(const dss_family* family, dss_sequence** out);

/* products */
DSS_API dss_status dss_direct_product(const dss_family* a, const dss_family* b, dss_family** out);
DSS_API dss_status dss_fhs_embedding_product(const dss_sequence* x, const dss_family* b,
                                             dss_family** out);
DSS_API dss_status dss_fhs_ds_product(const dss_sequence* x, const dss_family* d, dss_family** out);
DSS_API dss_status dss_predict_paley_product(uint64_t v, uint64_t q, uint64_t v2, uint64_t q2,
                                             dss_parameters* out, uint64_t* closed_form_index);
DSS_API dss_status dss_predict_hyperplane_product(uint64_t p, uint64_t s, uint64_t p2, uint64_t s2,
                                                  dss_parameters* out);

/* tables: which is "table1" or "paley-row" */
DSS_API dss_status dss_table_csv(const char* which, char** out);
DSS_API dss_status dss_paley_row_csv(uint64_t p, uint64_t q, char** out);

/* codec */
DSS_API dss_status dss_layout_create(const dss_family* family, size_t alphabet, dss_layout** out);
DSS_API void dss_layout_free(dss_layout* layout);
DSS_API size_t dss_layout_length(const dss_layout* layout);
DSS_API size_t dss_layout_free_count(const dss_layout* layout);
DSS_API uint64_t dss_layout_tolerance(const dss_layout* layout);
DSS_API dss_status dss_layout_pattern(const dss_layout* layout, char** out);
DSS_API dss_status dss_encode(const dss_layout* layout, const uint32_t* payload, size_t payload_len,
                              uint32_t* window, size_t window_len);
DSS_API dss_status dss_decode(const dss_layout* layout, const uint32_t* window, size_t window_len,
                              uint32_t* payload, size_t payload_len);
DSS_API dss_status dss_is_sync(const dss_layout* layout, const uint32_t* window, size_t window_len,
                               int* synced);
/* noise: "exact-<t>" or "iid-<p>" */
DSS_API dss_status dss_simulate(const dss_layout* layout, uint64_t blocks, const char* noise,
                                uint64_t seed, dss_sync_stats* out);
DSS_API dss_status dss_simulate_json(const dss_layout* layout, uint64_t blocks, const char* noise,
                                     uint64_t seed, char** out);

#ifdef __cplusplus
}
#endif

#endif /* DSS_DSS_H */

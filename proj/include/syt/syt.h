#ifndef SYT_SYT_H
#define SYT_SYT_H

#include <stddef.h>
#include <stdint.h>

#if defined(SYT_BUILDING_LIBRARY)
#define SYT_API __attribute__((visibility("default")))
#else
#define SYT_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Every fallible call returns a status; on failure the message is available
 * from syt_last_error() on the calling thread until its next failing call. */
typedef enum syt_status {
  SYT_OK = 0,
  SYT_ERR_INVALID_ARGUMENT,
  SYT_ERR_STRICTNESS_VIOLATION,
  SYT_ERR_NOT_CONTAINED,
  SYT_ERR_INVALID_TRUNCATION,
  SYT_ERR_LABEL_SET_MISMATCH,
  SYT_ERR_NOT_AN_INTEGER,
  SYT_ERR_PART_TOO_SMALL,
  SYT_ERR_UNSUPPORTED_REGION,
  SYT_ERR_INCOMPATIBLE_SHAPES,
  SYT_ERR_NOT_ON_BOUNDARY,
  SYT_ERR_INVALID_SPEC,
  SYT_ERR_NO_FORMULA,
  SYT_ERR_UNKNOWN_IDENTITY,
  SYT_ERR_UNKNOWN_FAMILY,
  SYT_ERR_RANGE_TOO_LARGE,
  SYT_ERR_INTERNAL
} syt_status;

typedef enum syt_method {
  SYT_METHOD_AUTO = 0,
  SYT_METHOD_FORMULA,
  SYT_METHOD_ORACLE
} syt_method;

typedef struct syt_region syt_region;
typedef struct syt_factorization syt_factorization;
typedef struct syt_tableaux syt_tableaux;
typedef struct syt_report syt_report;
typedef struct syt_table syt_table;

SYT_API const char* syt_version(void);
SYT_API const char* syt_status_name(syt_status status);
SYT_API const char* syt_last_error(void);
/* Frees strings returned through char** out-parameters. */
SYT_API void syt_string_free(char* s);

/* ---- shapes ------------------------------------------------------------
 * Spec grammar: part:3,2,1 | shifted:4,2 | stair:4[/1] | rect:6x7[/2]   */
SYT_API syt_status syt_region_parse(const char* spec, syt_region** out);
SYT_API void syt_region_destroy(syt_region* region);
SYT_API int syt_region_size(const syt_region* region);
SYT_API int syt_region_rows(const syt_region* region);
/* Row r is 1-based; an empty row reports end == start - 1. */
SYT_API syt_status syt_region_row(const syt_region* region, int r, int* start, int* end);
SYT_API syt_status syt_region_spec(const syt_region* region, char** out);

/* Exact count in decimal. `method_used` receives "oracle" or
 * "formula:<family>"; either out-pointer except `value` may be NULL. */
SYT_API syt_status syt_count(const syt_region* region, syt_method method, char** value,
                             char** method_used, int* conjecture);

/* ---- factorization ----------------------------------------------------- */
SYT_API syt_status syt_factorize(const char* decimal, syt_factorization** out);
SYT_API void syt_factorization_destroy(syt_factorization* f);
SYT_API size_t syt_factorization_terms(const syt_factorization* f);
SYT_API syt_status syt_factorization_term(const syt_factorization* f, size_t index, char** prime,
                                          unsigned* exponent);
SYT_API syt_status syt_factorization_largest_prime(const syt_factorization* f, char** out);
SYT_API int syt_factorization_complete(const syt_factorization* f);
SYT_API int syt_factorization_probabilistic(const syt_factorization* f);
SYT_API syt_status syt_factorization_string(const syt_factorization* f, char** out);
SYT_API syt_status syt_is_smooth(const char* decimal, uint64_t bound, int* out);

/* ---- enumeration -------------------------------------------------------
 * limit 0 means no limit. Labels come in row-major cell order. */
SYT_API syt_status syt_enumerate(const syt_region* region, size_t limit, syt_tableaux** out);
SYT_API void syt_tableaux_destroy(syt_tableaux* t);
SYT_API size_t syt_tableaux_count(const syt_tableaux* t);
SYT_API const int* syt_tableaux_labels(const syt_tableaux* t, size_t index);

/* ---- identity verification --------------------------------------------- */
typedef struct syt_verify_args {
  const int* mu; /* NULL when absent */
  size_t mu_len;
  /* negative means absent */
  int m, n, k, t, t1, t2, big_n;
} syt_verify_args;

SYT_API void syt_verify_args_init(syt_verify_args* args);
SYT_API size_t syt_identity_count(void);
SYT_API const char* syt_identity_name(size_t index);
SYT_API syt_status syt_verify(const char* identity, const syt_verify_args* args, syt_report** out);
SYT_API void syt_report_destroy(syt_report* r);
SYT_API const char* syt_report_identity(const syt_report* r);
SYT_API const char* syt_report_title(const syt_report* r);
SYT_API const char* syt_report_lhs(const syt_report* r);
SYT_API const char* syt_report_rhs(const syt_report* r);
SYT_API int syt_report_passed(const syt_report* r);
SYT_API int syt_report_conjecture(const syt_report* r);
SYT_API size_t syt_report_detail_count(const syt_report* r);
SYT_API const char* syt_report_detail(const syt_report* r, size_t index);

/* ---- family scans ------------------------------------------------------ */
typedef struct syt_scan_request {
  const char* family;
  /* "a..b" or "a"; NULL when absent */
  const char* m_range;
  const char* n_range;
  const char* k_range;
  const int* kappa;
  size_t kappa_len;
  int oracle_max_n; /* <= 0 selects the default of 48 */
  unsigned threads; /* 0 selects hardware concurrency */
} syt_scan_request;

SYT_API void syt_scan_request_init(syt_scan_request* req);
SYT_API size_t syt_scan_family_count(void);
SYT_API const char* syt_scan_family_name(size_t index);
SYT_API syt_status syt_scan(const syt_scan_request* req, syt_table** out);
SYT_API void syt_table_destroy(syt_table* t);
SYT_API size_t syt_table_rows(const syt_table* t);
SYT_API const char* syt_table_family(const syt_table* t, size_t row);
SYT_API const char* syt_table_params(const syt_table* t, size_t row);
SYT_API int syt_table_size(const syt_table* t, size_t row);
SYT_API const char* syt_table_count(const syt_table* t, size_t row);
SYT_API const char* syt_table_largest_prime(const syt_table* t, size_t row);
SYT_API int syt_table_smooth(const syt_table* t, size_t row);

#ifdef __cplusplus
}
#endif

#endif

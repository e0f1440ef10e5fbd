#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "syt/syt.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: FAILED %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

static void test_regions(void) {
  syt_region* r = NULL;
  EXPECT(syt_region_parse("stair:4/1", &r) == SYT_OK);
  EXPECT(syt_region_size(r) == 9);
  EXPECT(syt_region_rows(r) == 4);
  int start = 0, end = 0;
  EXPECT(syt_region_row(r, 2, &start, &end) == SYT_OK);
  EXPECT(start == 2 && end == 4);
  EXPECT(syt_region_row(r, 5, &start, &end) == SYT_ERR_INVALID_ARGUMENT);
  char* spec = NULL;
  EXPECT(syt_region_spec(r, &spec) == SYT_OK);
  EXPECT(strcmp(spec, "stair:4/1") == 0);
  syt_string_free(spec);

  char* value = NULL;
  char* method = NULL;
  int conjecture = -1;
  EXPECT(syt_count(r, SYT_METHOD_ORACLE, &value, &method, &conjecture) == SYT_OK);
  EXPECT(strcmp(value, "4") == 0);
  EXPECT(strcmp(method, "oracle") == 0);
  EXPECT(conjecture == 0);
  syt_string_free(value);
  syt_string_free(method);
  EXPECT(syt_count(r, SYT_METHOD_FORMULA, &value, NULL, NULL) == SYT_OK);
  EXPECT(strcmp(value, "4") == 0);
  syt_string_free(value);

  syt_tableaux* all = NULL;
  EXPECT(syt_enumerate(r, 0, &all) == SYT_OK);
  EXPECT(syt_tableaux_count(all) == 4);
  const int* first = syt_tableaux_labels(all, 0);
  EXPECT(first != NULL && first[0] == 1 && first[1] == 2);
  EXPECT(syt_tableaux_labels(all, 4) == NULL);
  syt_tableaux_destroy(all);
  EXPECT(syt_enumerate(r, 1, &all) == SYT_OK);
  EXPECT(syt_tableaux_count(all) == 1);
  syt_tableaux_destroy(all);
  syt_region_destroy(r);

  r = NULL;
  EXPECT(syt_region_parse("stair:4/4", &r) == SYT_ERR_INVALID_TRUNCATION);
  EXPECT(r == NULL);
  EXPECT(strlen(syt_last_error()) > 0);
  EXPECT(syt_region_parse("hexagon:3", &r) == SYT_ERR_INVALID_SPEC);
  EXPECT(syt_region_parse(NULL, &r) == SYT_ERR_INVALID_ARGUMENT);

  EXPECT(syt_region_parse("rect:5x5/3", &r) == SYT_OK);
  EXPECT(syt_count(r, SYT_METHOD_FORMULA, &value, NULL, NULL) == SYT_ERR_NO_FORMULA);
  syt_region_destroy(r);

  EXPECT(syt_region_parse("rect:4x4/2", &r) == SYT_OK);
  EXPECT(syt_count(r, SYT_METHOD_FORMULA, &value, &method, &conjecture) == SYT_OK);
  EXPECT(conjecture == 1);
  EXPECT(strcmp(method, "formula:square-minus-two") == 0);
  syt_string_free(value);
  syt_string_free(method);
  EXPECT(syt_count(r, SYT_METHOD_AUTO, &value, &method, &conjecture) == SYT_OK);
  EXPECT(conjecture == 0);
  EXPECT(strcmp(method, "oracle") == 0);
  syt_string_free(value);
  syt_string_free(method);
  syt_region_destroy(r);
}

static void test_factorization(void) {
  syt_factorization* f = NULL;
  EXPECT(syt_factorize("12", &f) == SYT_OK);
  EXPECT(syt_factorization_terms(f) == 2);
  char* p = NULL;
  unsigned e = 0;
  EXPECT(syt_factorization_term(f, 0, &p, &e) == SYT_OK);
  EXPECT(strcmp(p, "2") == 0 && e == 2);
  syt_string_free(p);
  EXPECT(syt_factorization_largest_prime(f, &p) == SYT_OK);
  EXPECT(strcmp(p, "3") == 0);
  syt_string_free(p);
  EXPECT(syt_factorization_complete(f) == 1);
  EXPECT(syt_factorization_string(f, &p) == SYT_OK);
  EXPECT(strcmp(p, "2^2 * 3") == 0);
  syt_string_free(p);
  syt_factorization_destroy(f);

  EXPECT(syt_factorize("107368143474415824", &f) == SYT_OK);
  EXPECT(syt_factorization_largest_prime(f, &p) == SYT_OK);
  EXPECT(strcmp(p, "5333") == 0);
  syt_string_free(p);
  syt_factorization_destroy(f);

  int smooth = -1;
  EXPECT(syt_is_smooth("107368143474415824", 40, &smooth) == SYT_OK && smooth == 0);
  EXPECT(syt_is_smooth("30", 5, &smooth) == SYT_OK && smooth == 1);
  EXPECT(syt_is_smooth("1", 1, &smooth) == SYT_OK && smooth == 1);
  EXPECT(syt_factorize("0", &f) == SYT_ERR_INVALID_ARGUMENT);
  EXPECT(syt_factorize("12x", &f) == SYT_ERR_INVALID_ARGUMENT);
}

static void test_verify(void) {
  syt_verify_args a;
  syt_verify_args_init(&a);
  const int mu[] = {3, 1};
  a.mu = mu;
  a.mu_len = 2;
  a.m = 0;
  syt_report* r = NULL;
  EXPECT(syt_verify("pivot-stair", &a, &r) == SYT_OK);
  EXPECT(syt_report_passed(r) == 1);
  EXPECT(strcmp(syt_report_lhs(r), "4") == 0);
  EXPECT(strcmp(syt_report_rhs(r), "4") == 0);
  EXPECT(syt_report_detail_count(r) > 0);
  EXPECT(syt_report_conjecture(r) == 0);
  syt_report_destroy(r);

  syt_verify_args_init(&a);
  a.n = 4;
  EXPECT(syt_verify("conjecture", &a, &r) == SYT_OK);
  EXPECT(syt_report_conjecture(r) == 1);
  EXPECT(syt_report_passed(r) == 1);
  syt_report_destroy(r);

  EXPECT(syt_verify("bogus", &a, &r) == SYT_ERR_UNKNOWN_IDENTITY);
  EXPECT(syt_identity_count() == 10);
  EXPECT(strcmp(syt_identity_name(0), "sum-shifted") == 0);
  EXPECT(syt_identity_name(10) == NULL);
}

static void test_scan(void) {
  syt_scan_request req;
  syt_scan_request_init(&req);
  req.family = "square-minus-two";
  req.n_range = "2..7";
  req.threads = 1;
  syt_table* t = NULL;
  EXPECT(syt_scan(&req, &t) == SYT_OK);
  EXPECT(syt_table_rows(t) == 6);
  EXPECT(strcmp(syt_table_family(t, 0), "square-minus-two") == 0);
  EXPECT(syt_table_size(t, 0) == 2);
  EXPECT(strcmp(syt_table_count(t, 0), "1") == 0);
  EXPECT(syt_table_count(t, 6) == NULL);
  syt_table_destroy(t);

  const int kappa[] = {2};
  syt_scan_request_init(&req);
  req.family = "rect-trunc";
  req.m_range = "6";
  req.n_range = "7";
  req.kappa = kappa;
  req.kappa_len = 1;
  EXPECT(syt_scan(&req, &t) == SYT_OK);
  EXPECT(syt_table_rows(t) == 1);
  EXPECT(syt_table_smooth(t, 0) == 0);
  EXPECT(strcmp(syt_table_largest_prime(t, 0), "5333") == 0);
  syt_table_destroy(t);

  req.n_range = "7..20";
  EXPECT(syt_scan(&req, &t) == SYT_ERR_RANGE_TOO_LARGE);
  req.family = "nope";
  EXPECT(syt_scan(&req, &t) == SYT_ERR_UNKNOWN_FAMILY);
  EXPECT(syt_scan_family_count() == 9);
}

static void test_misc(void) {
  EXPECT(strcmp(syt_version(), "1.0.0") == 0);
  EXPECT(strcmp(syt_status_name(SYT_OK), "OK") == 0);
  EXPECT(strcmp(syt_status_name(SYT_ERR_NOT_ON_BOUNDARY), "NotOnBoundary") == 0);
  EXPECT(strcmp(syt_status_name((syt_status)999), "Unknown") == 0);
  EXPECT(syt_region_size(NULL) == 0);
  syt_region_destroy(NULL);
  syt_string_free(NULL);
}

int main(void) {
  test_regions();
  test_factorization();
  test_verify();
  test_scan();
  test_misc();
  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}

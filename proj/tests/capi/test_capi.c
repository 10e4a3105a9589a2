#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "permvar/permvar.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

#define EXPECT_OK(call)                                                               \
  do {                                                                                \
    pv_status st_ = (call);                                                           \
    if (st_ != PV_OK) {                                                               \
      fprintf(stderr, "%s:%d: %s -> %s: %s\n", __FILE__, __LINE__, #call,             \
              pv_status_name(st_), pv_last_error());                                  \
      ++failures;                                                                     \
    }                                                                                 \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

static void count_reports(const char* json, void* user) {
  (void)json;
  ++*(int*)user;
}

static void test_numeric(void) {
  char* s = NULL;
  EXPECT_OK(pv_permanent("[[1,1],[1,-1]]", 0, &s));
  EXPECT(s && strcmp(s, "0") == 0);
  pv_string_free(s);
  EXPECT_OK(pv_permanent("[[1,2],[3,4]]", 0, &s));
  EXPECT(s && strcmp(s, "10") == 0);
  pv_string_free(s);
  EXPECT_OK(pv_permanent("[[1,2],[3,4]]", 7, &s));
  EXPECT(s && strcmp(s, "3") == 0);
  pv_string_free(s);
  EXPECT_OK(pv_permanent("[[\"1/2\",1],[1,2]]", 0, &s));
  EXPECT(s && strcmp(s, "2") == 0);
  pv_string_free(s);

  EXPECT(pv_permanent("[[1,2],[3]", 0, &s) == PV_ERR_PARSE);
  EXPECT(strlen(pv_last_error()) > 0);
  EXPECT(pv_permanent("[[1,2,3],[4,5,6]]", 0, &s) == PV_ERR_STRUCTURAL);
  EXPECT(pv_permanent(NULL, 0, &s) == PV_ERR_PRECONDITION);

  size_t r = 0;
  EXPECT_OK(pv_kirkup_matrix(3, &s));
  EXPECT(contains(s, "-7"));
  EXPECT_OK(pv_prk(s, &r));
  EXPECT(r == 2);

  char* report = NULL;
  EXPECT_OK(pv_classify_type("[[1,1,-4,2],[1,1,3,5]]", "B1", &report));
  EXPECT(contains(report, "\"rank\":3"));
  EXPECT(contains(report, "\"type\":1"));
  pv_string_free(report);

  char* d = NULL;
  EXPECT_OK(pv_derivative_matrix("[[1,1,-4,2],[1,1,3,5]]", "B1", &d));
  EXPECT(contains(d, "-14"));
  pv_string_free(d);

  int ok = 0;
  EXPECT_OK(pv_kernel_extension("[[1,1,-4,2],[1,1,3,5]]", "B1", "[[1,1,1,-7]]", &ok));
  EXPECT(ok == 1);
  EXPECT_OK(pv_kernel_extension("[[1,1,-4,2],[1,1,3,5]]", "B1", "[[1,0,0,0]]", &ok));
  EXPECT(ok == 0);
  EXPECT(pv_kernel_extension("[[1,1,-4,2],[1,1,3,5]]", "X", "[[1,0,0,0]]", &ok) == PV_ERR_PARSE);
  EXPECT(pv_kirkup_matrix(2, &d) == PV_ERR_PRECONDITION);
  pv_string_free(s);
}

static void test_ideals(void) {
  pv_ideal* ideal = NULL;
  pv_gb* gb = NULL;
  char* s = NULL;
  EXPECT_OK(pv_ideal_permanental(2, 4, 0, "generic", 0, "degrevlex", "GF(32003)", &ideal));
  EXPECT(pv_ideal_size(ideal) == 6);
  EXPECT_OK(pv_groebner(ideal, 60, &gb));
  EXPECT_OK(pv_gb_dimension(gb, &s));
  EXPECT(contains(s, "\"codim\":4"));
  pv_string_free(s);
  EXPECT_OK(pv_gb_normal_form(gb, "x_1_1*x_2_2 + x_1_2*x_2_1", &s));
  EXPECT(s && strcmp(s, "0") == 0);
  pv_string_free(s);
  EXPECT(pv_gb_normal_form(gb, "y + 1", &s) == PV_ERR_PARSE);
  EXPECT_OK(pv_gb_stats(gb, &s));
  EXPECT(contains(s, "pairs_created"));
  pv_string_free(s);
  pv_gb_free(gb);
  pv_ideal_free(ideal);

  EXPECT_OK(pv_ideal_parse("x^2 - y\nx*y - 1\n", "lex", "QQ", &ideal));
  EXPECT(pv_ideal_size(ideal) == 2);
  EXPECT_OK(pv_ideal_to_json(ideal, &s));
  EXPECT(contains(s, "\"gens\""));
  pv_string_free(s);
  EXPECT_OK(pv_groebner(ideal, 60, &gb));
  EXPECT_OK(pv_gb_to_text(gb, &s));
  EXPECT(contains(s, "y^3 - 1"));
  pv_string_free(s);
  pv_gb_free(gb);
  EXPECT(pv_ideal_parse("x +* y", NULL, NULL, &ideal) == PV_ERR_PARSE);
  pv_ideal_free(ideal);

  pv_ideal* p34 = NULL;
  pv_ideal* sat = NULL;
  EXPECT_OK(pv_ideal_permanental(3, 4, 0, NULL, 0, NULL, "GF(2147483647)", &p34));
  EXPECT_OK(pv_ideal_saturate(p34, "prod", 600, &sat));
  EXPECT_OK(pv_groebner(sat, 600, &gb));
  EXPECT_OK(pv_gb_dimension(gb, &s));
  EXPECT(contains(s, "\"codim\":4"));
  EXPECT(contains(s, "\"degree\":66"));
  pv_string_free(s);
  pv_gb_free(gb);
  pv_ideal_free(sat);
  pv_ideal_free(p34);

  pv_ideal* hankel = NULL;
  EXPECT_OK(pv_ideal_permanental(2, 3, 2, "hankel", 0, NULL, "QQ", &hankel));
  EXPECT_OK(pv_ideal_to_text(hankel, &s));
  EXPECT(contains(s, "x0"));
  pv_string_free(s);
  pv_ideal_free(hankel);
  EXPECT(pv_ideal_permanental(2, 3, 2, "diagonal", 0, NULL, "QQ", &hankel) == PV_ERR_PARSE);
}

static void test_config_and_cases(void) {
  pv_config* cfg = NULL;
  char* s = NULL;
  EXPECT_OK(pv_config_new(&cfg));
  EXPECT_OK(pv_config_set_primes(cfg, 32003, 65521));
  EXPECT_OK(pv_config_set_seed(cfg, 7));
  EXPECT(pv_config_set_order(cfg, "revlex") == PV_ERR_PARSE);
  EXPECT(pv_config_set_tier(cfg, "slow") == PV_ERR_PARSE);
  EXPECT(pv_config_set_primes(cfg, 32003, 4) == PV_ERR_STRUCTURAL);
  EXPECT(pv_config_merge_json(cfg, "{\"colour\": 1}") == PV_ERR_PARSE);
  EXPECT_OK(pv_config_merge_json(cfg, "{\"timeout\": 120, \"order\": \"lex\"}"));
  EXPECT_OK(pv_config_to_json(cfg, &s));
  EXPECT(contains(s, "\"prime\":32003"));
  EXPECT(contains(s, "\"seed\":7"));
  EXPECT(contains(s, "\"order\":\"lex\""));
  pv_string_free(s);
  EXPECT_OK(pv_config_set_order(cfg, "degrevlex"));

  EXPECT_OK(pv_case_list(&s));
  EXPECT(contains(s, "hankel-degree8"));
  EXPECT(contains(s, "script-5x6"));
  pv_string_free(s);

  EXPECT_OK(pv_config_set_overrides(cfg, "{\"n\": 5}"));
  EXPECT_OK(pv_reproduce("hankel-degree8", cfg, &s));
  EXPECT(contains(s, "\"status\":\"pass\""));
  EXPECT(contains(s, "\"n=5\":8"));
  EXPECT(contains(s, "\"primes\":[32003,65521]"));
  pv_string_free(s);
  EXPECT(pv_reproduce("nope", cfg, &s) == PV_ERR_NOT_FOUND);

  EXPECT_OK(pv_config_set_overrides(cfg, "{}"));
  EXPECT_OK(pv_slice_bound("circulant3", 0, cfg, &s));
  EXPECT(contains(s, "\"bound\":4"));
  pv_string_free(s);
  EXPECT_OK(pv_slice_bound("hankel2xn:5", 2, cfg, &s));
  EXPECT(contains(s, "\"slice_vars\":6"));
  pv_string_free(s);
  EXPECT(pv_slice_bound("circulant9", 0, cfg, &s) == PV_ERR_PARSE);

  EXPECT_OK(pv_census(3, cfg, &s));
  EXPECT(contains(s, "\"status\":\"pass\""));
  pv_string_free(s);
  pv_config_free(cfg);
}

static void test_reproduce_all(void) {
  pv_config* cfg = NULL;
  int seen = 0, passed = 0;
  EXPECT_OK(pv_config_new(&cfg));
  EXPECT_OK(pv_reproduce_all(cfg, count_reports, &seen, &passed));
  EXPECT(seen >= 13);
  EXPECT(passed == 1);
  pv_config_free(cfg);
}

int main(void) {
  EXPECT(strlen(pv_version()) > 0);
  test_numeric();
  test_ideals();
  test_config_and_cases();
  test_reproduce_all();
  if (failures) {
    fprintf(stderr, "%d failure(s)\n", failures);
    return 1;
  }
  printf("capi tests passed\n");
  return 0;
}

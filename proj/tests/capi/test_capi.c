/* Exercises the public header from C: handles, status codes, JSON output. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "fillprobe/fillprobe.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int contains(const char* haystack, const char* needle) { return haystack && strstr(haystack, needle) != NULL; }

int main(void) {
  fp_options* opts = fp_options_new();
  fp_group* z2 = NULL;
  fp_group* f2 = NULL;
  fp_group* bad = NULL;
  char* json = NULL;

  EXPECT(opts != NULL);
  EXPECT(strcmp(fp_status_name(FP_NO_FILLING), "no-filling") == 0);
  EXPECT(fp_options_set_k_max(opts, 2) == FP_INVALID_ARGUMENT);
  EXPECT(strlen(fp_last_error()) > 0);
  EXPECT(fp_options_set_k_max(opts, 8) == FP_OK);
  EXPECT(fp_options_set_cache_dir(opts, "") == FP_OK);

  EXPECT(fp_group_from_catalog("Z2", opts, &z2) == FP_OK);
  EXPECT(fp_group_is_confluent(z2) == 1);
  EXPECT(fp_group_from_catalog("no-such-group", opts, &bad) == FP_INVALID_ARGUMENT);
  EXPECT(bad == NULL);
  EXPECT(fp_group_parse("a, b | a b a^-1", opts, &bad) == FP_OK);
  fp_group_free(bad);
  bad = NULL;
  EXPECT(fp_group_parse("a, b | a c", opts, &bad) == FP_SYNTAX);
  EXPECT(contains(fp_last_error(), "column"));

  EXPECT(fp_fill_json(z2, "a b a^-1 b^-1", opts, &json) == FP_OK);
  EXPECT(contains(json, "\"value\": \"1/1\""));
  EXPECT(contains(json, "\"ring\": \"Z\""));
  fp_string_free(json);
  json = NULL;

  EXPECT(fp_fill_json(z2, "a b", opts, &json) == FP_NOT_CLOSED);
  EXPECT(json == NULL);
  EXPECT(fp_options_set_radius_cap(opts, 1) == FP_OK);
  EXPECT(fp_fill_json(z2, "a b a^-1 b^-1", opts, &json) == FP_NO_FILLING);
  EXPECT(fp_options_set_radius_cap(opts, 0) == FP_OK);

  EXPECT(fp_ball_json(z2, 2, opts, &json) == FP_OK);
  EXPECT(contains(json, "\"vertices\": 13"));
  EXPECT(contains(json, "\"d1_d2_zero\": true"));
  fp_string_free(json);

  EXPECT(fp_fv_json(z2, opts, &json) == FP_OK);
  EXPECT(contains(json, "\"4/1\""));
  EXPECT(contains(json, "\"class\": \"quadratic\""));
  fp_string_free(json);

  EXPECT(fp_group_from_catalog("F2", opts, &f2) == FP_OK);
  EXPECT(fp_probe_hyperbolic_json(f2, opts, &json) == FP_OK);
  EXPECT(contains(json, "consistent-with-hyperbolic"));
  fp_string_free(json);

  {
    unsigned radii[] = {1, 2};
    unsigned zero[] = {0};
    EXPECT(fp_probe_amenable_json(z2, radii, 2, opts, &json) == FP_OK);
    EXPECT(contains(json, "\"5/12\""));
    fp_string_free(json);
    EXPECT(fp_probe_amenable_json(z2, zero, 1, opts, &json) == FP_INVALID_ARGUMENT);
    EXPECT(fp_probe_amenable_json(z2, NULL, 0, opts, &json) == FP_INVALID_ARGUMENT);
  }

  {
    fp_group* h3 = NULL;
    fp_options* tight = fp_options_new();
    EXPECT(fp_options_set_completion(tight, 8, 8) == FP_OK);
    EXPECT(fp_group_from_catalog("H3", tight, &h3) == FP_OK);
    EXPECT(fp_group_is_confluent(h3) == 0);
    EXPECT(fp_fv_json(h3, tight, &json) == FP_INCOMPLETE_REWRITING);
    fp_group_free(h3);
    fp_options_free(tight);
  }

  EXPECT(fp_catalog_json(&json) == FP_OK);
  EXPECT(contains(json, "genus2"));
  fp_string_free(json);

  {
    size_t verified = 0, failed = 1;
    fp_verification_stats(&verified, &failed);
    EXPECT(verified > 0);
    EXPECT(failed == 0);
  }

  fp_group_free(z2);
  fp_group_free(f2);
  fp_options_free(opts);
  if (failures) fprintf(stderr, "%d check(s) failed\n", failures);
  else printf("all C API checks passed\n");
  return failures ? EXIT_FAILURE : EXIT_SUCCESS;
}

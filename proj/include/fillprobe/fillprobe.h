/* Filling norms and finite-scale growth probes for finitely presented groups.
 *
 * Every function returns an fp_status. On failure, fp_last_error() holds a
 * message for the calling thread until its next failing call. Strings
 * returned through char** must be released with fp_string_free. Rational
 * numbers in JSON output are always "num/den" strings.
 */
#ifndef FILLPROBE_FILLPROBE_H
#define FILLPROBE_FILLPROBE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define FP_API __declspec(dllexport)
#else
#define FP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fp_status {
  FP_OK = 0,
  FP_INVALID_ARGUMENT = 1,
  FP_SYNTAX = 2,
  FP_NOT_CLOSED = 3,
  FP_NO_FILLING = 4,
  FP_RESOURCE = 5,
  FP_INCOMPLETE_REWRITING = 6,
  FP_IO = 7,
  FP_INTERNAL = 8
} fp_status;

typedef enum fp_sampling {
  FP_SAMPLING_AUTO = 0,
  FP_SAMPLING_EXHAUSTIVE = 1,
  FP_SAMPLING_SAMPLED = 2
} fp_sampling;

/* A presentation together with its rewriting system. */
typedef struct fp_group fp_group;
/* Caps, budgets and seeds shared by all computations. */
typedef struct fp_options fp_options;

FP_API const char* fp_version(void);
FP_API const char* fp_last_error(void);
FP_API const char* fp_status_name(fp_status status);
FP_API void fp_string_free(char* s);

/* Line, compact or JSON presentation text. Runs bounded completion unless
 * the text carries a confluent rule set. */
FP_API fp_status fp_group_parse(const char* text, const fp_options* options, fp_group** out);
/* F1, F2, Z2, Z3, H3, genus2, BS12. */
FP_API fp_status fp_group_from_catalog(const char* name, const fp_options* options, fp_group** out);
FP_API void fp_group_free(fp_group* group);
/* 1 when the rewriting system is confluent, 0 otherwise. */
FP_API int fp_group_is_confluent(const fp_group* group);
FP_API fp_status fp_group_info_json(const fp_group* group, char** out_json);
FP_API fp_status fp_catalog_json(char** out_json);

FP_API fp_options* fp_options_new(void);
FP_API void fp_options_free(fp_options* options);
/* 0 picks the radius from the input size. */
FP_API fp_status fp_options_set_radius_cap(fp_options* options, unsigned radius);
FP_API fp_status fp_options_set_vertex_cap(fp_options* options, size_t vertices);
FP_API fp_status fp_options_set_walk_cap(fp_options* options, size_t walks);
FP_API fp_status fp_options_set_node_budget(fp_options* options, size_t nodes);
FP_API fp_status fp_options_set_completion(fp_options* options, size_t max_rules, size_t max_len);
FP_API fp_status fp_options_set_seed(fp_options* options, uint64_t seed);
FP_API fp_status fp_options_set_k_max(fp_options* options, unsigned k_max);
FP_API fp_status fp_options_set_sampling(fp_options* options, fp_sampling mode, size_t samples);
FP_API fp_status fp_options_set_workers(fp_options* options, unsigned workers);
/* Directory for memoized complexes; NULL or "" disables the cache. */
FP_API fp_status fp_options_set_cache_dir(fp_options* options, const char* dir);

/* Truncated Cayley 2-complex: vertices, edges, cells, both boundary
 * matrices in coordinate form. */
FP_API fp_status fp_ball_json(const fp_group* group, unsigned radius, const fp_options* options, char** out_json);

/* Rational and integral filling norms of the loop read from a word.
 * FP_NOT_CLOSED for a word that is not trivial in the group, FP_NO_FILLING
 * when no radius up to the cap admits a filling. */
FP_API fp_status fp_fill_json(const fp_group* group, const char* word, const fp_options* options, char** out_json);

/* Filling-function table for k = 1..k_max with its growth fit. */
FP_API fp_status fp_fv_json(const fp_group* group, const fp_options* options, char** out_json);
FP_API fp_status fp_probe_hyperbolic_json(const fp_group* group, const fp_options* options, char** out_json);
FP_API fp_status fp_probe_amenable_json(const fp_group* group, const unsigned* radii, size_t count,
                                        const fp_options* options, char** out_json);

/* Process-wide counts of exact optimality checks on solver results. */
FP_API void fp_verification_stats(size_t* verified, size_t* failed);

#ifdef __cplusplus
}
#endif

#endif

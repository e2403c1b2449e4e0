// Copyright 2026 The flagsynth Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to flagsynth. Objects are opaque handles created by the
 * *_load / *_build / *_parse functions and released with the matching
 * *_free. Every fallible call returns a flagsynth_status; on failure a
 * description is available from flagsynth_last_error() on the same thread.
 * Strings returned through `char** out` are heap-allocated and must be
 * released with flagsynth_string_free(). */

#ifndef FLAGSYNTH_FLAGSYNTH_H_
#define FLAGSYNTH_FLAGSYNTH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(FLAGSYNTH_BUILDING_LIBRARY)
#    define FLAGSYNTH_API __declspec(dllexport)
#  else
#    define FLAGSYNTH_API __declspec(dllimport)
#  endif
#else
#  define FLAGSYNTH_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum flagsynth_status {
  FLAGSYNTH_OK = 0,
  FLAGSYNTH_ERR_IO = 1,
  FLAGSYNTH_ERR_PARSE = 2,
  FLAGSYNTH_ERR_EMPTY = 3,
  FLAGSYNTH_ERR_DEGENERATE = 4,
  FLAGSYNTH_ERR_ILLEGAL_BETA = 5,
  FLAGSYNTH_ERR_COVERAGE = 6,
  FLAGSYNTH_ERR_CONSISTENCY = 7,
  FLAGSYNTH_ERR_PARAMETER = 8,
  FLAGSYNTH_ERR_NUMERIC = 9,
  FLAGSYNTH_ERR_NO_FEASIBLE_FIT = 10,
  FLAGSYNTH_ERR_INVALID_ARGUMENT = 11, /* null handle or output pointer */
  FLAGSYNTH_ERR_INTERNAL = 12
} flagsynth_status;

FLAGSYNTH_API const char* flagsynth_version(void);
FLAGSYNTH_API const char* flagsynth_status_string(flagsynth_status status);
/* Message for the most recent failure on the calling thread. */
FLAGSYNTH_API const char* flagsynth_last_error(void);
FLAGSYNTH_API void flagsynth_string_free(char* s);

/* ---- interaction data -------------------------------------------------- */

typedef enum flagsynth_interaction_format {
  FLAGSYNTH_FORMAT_ML1M_RATINGS = 0,
  FLAGSYNTH_FORMAT_CSV = 1
} flagsynth_interaction_format;

typedef struct flagsynth_csv_config {
  char delimiter;
  size_t entity_column;
  size_t counterpart_column;
  int header;
} flagsynth_csv_config;

FLAGSYNTH_API void flagsynth_csv_config_default(flagsynth_csv_config* config);

typedef struct flagsynth_dataset flagsynth_dataset;

/* `path` of "-" reads standard input. `csv` may be NULL for defaults. A
 * nonzero `dedup` collapses repeated (entity, counterpart) pairs. */
FLAGSYNTH_API flagsynth_status flagsynth_dataset_load(
    const char* path, flagsynth_interaction_format format,
    const flagsynth_csv_config* csv, int dedup, flagsynth_dataset** out);
FLAGSYNTH_API flagsynth_status flagsynth_dataset_parse(
    const char* data, size_t length, flagsynth_interaction_format format,
    const flagsynth_csv_config* csv, int dedup, flagsynth_dataset** out);
FLAGSYNTH_API size_t flagsynth_dataset_interactions(const flagsynth_dataset* d);
FLAGSYNTH_API size_t flagsynth_dataset_entities(const flagsynth_dataset* d);
FLAGSYNTH_API size_t flagsynth_dataset_counterparts(const flagsynth_dataset* d);
FLAGSYNTH_API void flagsynth_dataset_free(flagsynth_dataset* d);

/* ---- attribute tables -------------------------------------------------- */

typedef enum flagsynth_attribute_format {
  FLAGSYNTH_ATTR_ML1M_USERS = 0,  /* flag = gender F */
  FLAGSYNTH_ATTR_ML1M_MOVIES = 1, /* flag = genre list contains `genre` */
  FLAGSYNTH_ATTR_CSV = 2          /* entity_id,flag */
} flagsynth_attribute_format;

typedef struct flagsynth_attributes flagsynth_attributes;

/* `genre` is required for FLAGSYNTH_ATTR_ML1M_MOVIES and ignored otherwise. */
FLAGSYNTH_API flagsynth_status flagsynth_attributes_load(
    const char* path, flagsynth_attribute_format format, const char* genre,
    flagsynth_attributes** out);
FLAGSYNTH_API flagsynth_status flagsynth_attributes_parse(
    const char* data, size_t length, flagsynth_attribute_format format,
    const char* genre, flagsynth_attributes** out);
FLAGSYNTH_API size_t flagsynth_attributes_size(const flagsynth_attributes* a);
FLAGSYNTH_API size_t flagsynth_attributes_flagged(const flagsynth_attributes* a);
FLAGSYNTH_API flagsynth_status flagsynth_attributes_csv(
    const flagsynth_attributes* a, char** out);
FLAGSYNTH_API void flagsynth_attributes_free(flagsynth_attributes* a);

/* ---- profile-size distributions ---------------------------------------- */

typedef enum flagsynth_pivot {
  FLAGSYNTH_PIVOT_USER = 0,
  FLAGSYNTH_PIVOT_ITEM = 1
} flagsynth_pivot;

typedef struct flagsynth_distribution flagsynth_distribution;

/* `max_size` of 0 disables the cap; otherwise larger profiles are removed. */
FLAGSYNTH_API flagsynth_status flagsynth_distribution_build(
    const flagsynth_dataset* d, flagsynth_pivot pivot, size_t max_size,
    flagsynth_distribution** out);
/* counts[j - 1] = S(j); entities get synthetic ids. */
FLAGSYNTH_API flagsynth_status flagsynth_distribution_from_counts(
    const uint64_t* counts, size_t k, flagsynth_distribution** out);
FLAGSYNTH_API flagsynth_status flagsynth_distribution_from_sizes(
    const uint64_t* sizes, size_t n, flagsynth_distribution** out);
FLAGSYNTH_API size_t flagsynth_distribution_k(const flagsynth_distribution* s);
FLAGSYNTH_API uint64_t flagsynth_distribution_total(const flagsynth_distribution* s);
FLAGSYNTH_API uint64_t flagsynth_distribution_count(const flagsynth_distribution* s,
                                                    size_t size);

typedef struct flagsynth_summary {
  double mean;
  size_t median; /* lower median */
  size_t max;
  uint64_t entities;
  uint64_t interactions;
} flagsynth_summary;

FLAGSYNTH_API flagsynth_status flagsynth_distribution_summary(
    const flagsynth_distribution* s, flagsynth_summary* out);
/* size,count */
FLAGSYNTH_API flagsynth_status flagsynth_distribution_csv(
    const flagsynth_distribution* s, char** out);
/* size,log_size,log_count */
FLAGSYNTH_API flagsynth_status flagsynth_distribution_loglog_csv(
    const flagsynth_distribution* s, char** out);
FLAGSYNTH_API void flagsynth_distribution_free(flagsynth_distribution* s);

/* ---- power-law estimation ---------------------------------------------- */

typedef enum flagsynth_support {
  FLAGSYNTH_SUPPORT_TRUNCATED = 0,
  FLAGSYNTH_SUPPORT_INFINITE = 1
} flagsynth_support;

typedef struct flagsynth_powerlaw_fit {
  double alpha;
  size_t xmin;
  double ks_distance;
  flagsynth_support support;
  uint64_t n_tail;
  double log_likelihood;
} flagsynth_powerlaw_fit;

/* With nonzero `scan_xmin` the KS-optimal xmin is chosen and `xmin` ignored. */
FLAGSYNTH_API flagsynth_status flagsynth_estimate_alpha(
    const flagsynth_distribution* s, flagsynth_support support, int scan_xmin,
    size_t xmin, flagsynth_powerlaw_fit* out);
FLAGSYNTH_API flagsynth_status flagsynth_powerlaw_fit_json(
    const flagsynth_powerlaw_fit* fit, char** out);
/* Writes n sizes into `out`. */
FLAGSYNTH_API flagsynth_status flagsynth_sample_powerlaw(
    double alpha, size_t k, size_t xmin, size_t n, uint64_t seed,
    uint64_t* out);

/* ---- membership model -------------------------------------------------- */

FLAGSYNTH_API double flagsynth_unscaled_membership(double alpha, size_t j);
FLAGSYNTH_API flagsynth_status flagsynth_expected_group_b_mass(
    const flagsynth_distribution* s, double alpha, double* out);
FLAGSYNTH_API flagsynth_status flagsynth_beta_max(
    const flagsynth_distribution* s, double alpha, double* out);
/* Bound from the smallest occupied size instead of size 1. */
FLAGSYNTH_API flagsynth_status flagsynth_support_beta_max(
    const flagsynth_distribution* s, double alpha, double* out);
/* alpha,beta_max,support_beta_max for each of `alphas`. */
FLAGSYNTH_API flagsynth_status flagsynth_beta_max_csv(
    const flagsynth_distribution* s, const double* alphas, size_t n,
    char** out);

typedef enum flagsynth_legality {
  FLAGSYNTH_LEGALITY_STRICT = 0,
  FLAGSYNTH_LEGALITY_CLAMP = 1
} flagsynth_legality;

typedef struct flagsynth_model flagsynth_model;

/* Strict mode fails with FLAGSYNTH_ERR_ILLEGAL_BETA when beta > beta_max. */
FLAGSYNTH_API flagsynth_status flagsynth_model_build(
    const flagsynth_distribution* s, double alpha, double beta,
    flagsynth_legality legality, flagsynth_model** out);
FLAGSYNTH_API size_t flagsynth_model_k(const flagsynth_model* m);
/* p_j for j in 1..k, NaN otherwise. */
FLAGSYNTH_API double flagsynth_model_probability(const flagsynth_model* m,
                                                 size_t j);
FLAGSYNTH_API double flagsynth_model_beta_max(const flagsynth_model* m);
FLAGSYNTH_API int flagsynth_model_clamped(const flagsynth_model* m);
FLAGSYNTH_API double flagsynth_model_expected_group_b(const flagsynth_model* m);

typedef struct flagsynth_expected_count {
  size_t size;
  double expected_b;
  double expected_a;
} flagsynth_expected_count;

/* Fills up to `capacity` rows and returns k. */
FLAGSYNTH_API size_t flagsynth_model_expected_counts(
    const flagsynth_model* m, flagsynth_expected_count* rows, size_t capacity);
FLAGSYNTH_API flagsynth_status flagsynth_model_json(const flagsynth_model* m,
                                                    char** out);
FLAGSYNTH_API flagsynth_status flagsynth_model_expected_csv(
    const flagsynth_model* m, char** out);
FLAGSYNTH_API void flagsynth_model_free(flagsynth_model* m);

/* ---- label assignment -------------------------------------------------- */

typedef struct flagsynth_assignment flagsynth_assignment;

/* Output does not depend on `threads` (0 is treated as 1). */
FLAGSYNTH_API flagsynth_status flagsynth_assign(
    const flagsynth_model* m, const flagsynth_distribution* s, uint64_t seed,
    unsigned threads, flagsynth_assignment** out);
FLAGSYNTH_API size_t flagsynth_assignment_size(const flagsynth_assignment* a);
/* 'A' or 'B'; 0 when out of range. */
FLAGSYNTH_API char flagsynth_assignment_label(const flagsynth_assignment* a,
                                              size_t index);
FLAGSYNTH_API const char* flagsynth_assignment_entity(
    const flagsynth_assignment* a, size_t index);

typedef struct flagsynth_realized {
  uint64_t count_a;
  uint64_t count_b;
  double mean_size_a;
  double mean_size_b;
} flagsynth_realized;

FLAGSYNTH_API flagsynth_status flagsynth_assignment_realized(
    const flagsynth_assignment* a, const flagsynth_distribution* s,
    flagsynth_realized* out);
/* entity_id,label */
FLAGSYNTH_API flagsynth_status flagsynth_assignment_labels_csv(
    const flagsynth_assignment* a, char** out);
/* {seed, alpha, beta, legality_mode, counts} */
FLAGSYNTH_API flagsynth_status flagsynth_assignment_json(
    const flagsynth_assignment* a, const flagsynth_distribution* s,
    char** out);
FLAGSYNTH_API flagsynth_status flagsynth_assignment_realized_csv(
    const flagsynth_assignment* a, const flagsynth_distribution* s,
    char** out);
FLAGSYNTH_API void flagsynth_assignment_free(flagsynth_assignment* a);

/* ---- parameter fitting ------------------------------------------------- */

typedef enum flagsynth_beta_mode {
  FLAGSYNTH_BETA_FIXED = 0,   /* beta = observed flagged fraction */
  FLAGSYNTH_BETA_SEARCHED = 1
} flagsynth_beta_mode;

typedef struct flagsynth_fit_options {
  flagsynth_beta_mode beta_mode;
  double alpha_min;
  double alpha_max;
  double alpha_step;
  double beta_min;
  double beta_max;
  double beta_step;
  unsigned bins_per_decade;
  int record_surface;
  int allow_partial; /* drop entities missing from the attribute table */
} flagsynth_fit_options;

FLAGSYNTH_API void flagsynth_fit_options_default(flagsynth_fit_options* o);

typedef struct flagsynth_fit_result flagsynth_fit_result;

/* Coverage gaps fail with FLAGSYNTH_ERR_COVERAGE unless allow_partial. */
FLAGSYNTH_API flagsynth_status flagsynth_fit(
    const flagsynth_distribution* s, const flagsynth_attributes* attributes,
    const flagsynth_fit_options* options, flagsynth_fit_result** out);
FLAGSYNTH_API double flagsynth_fit_alpha(const flagsynth_fit_result* f);
FLAGSYNTH_API double flagsynth_fit_beta(const flagsynth_fit_result* f);
FLAGSYNTH_API double flagsynth_fit_objective(const flagsynth_fit_result* f);
FLAGSYNTH_API double flagsynth_fit_observed_fraction(const flagsynth_fit_result* f);
FLAGSYNTH_API uint64_t flagsynth_fit_excluded(const flagsynth_fit_result* f);
FLAGSYNTH_API flagsynth_status flagsynth_fit_json(const flagsynth_fit_result* f,
                                                  char** out);
/* alpha,beta,objective; empty body unless record_surface was set. */
FLAGSYNTH_API flagsynth_status flagsynth_fit_surface_csv(
    const flagsynth_fit_result* f, char** out);
FLAGSYNTH_API void flagsynth_fit_free(flagsynth_fit_result* f);

#ifdef __cplusplus
}  /* extern "C" */
#endif

#endif  /* FLAGSYNTH_FLAGSYNTH_H_ */

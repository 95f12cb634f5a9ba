// Copyright 2026 The convexpip Authors
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

/* C interface to the convexpip library. Every fallible call returns a
 * cpip_status; on failure cpip_last_error() holds a message for the calling
 * thread until its next failing call. Strings handed out by the library are
 * released with cpip_string_free. */
#ifndef CONVEXPIP_H_
#define CONVEXPIP_H_

#include <stddef.h>
#include <stdint.h>

#if defined(CPIP_BUILDING_LIBRARY)
#define CPIP_API __attribute__((visibility("default")))
#else
#define CPIP_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct cpip_polygon cpip_polygon;
typedef struct cpip_report cpip_report;

typedef enum {
  CPIP_OK = 0,
  CPIP_INVALID_ARGUMENT,
  CPIP_DEGENERATE_EDGE,
  CPIP_INVALID_REFERENCE,
  CPIP_TOO_FEW_VERTICES,
  CPIP_NOT_CONVEX,
  CPIP_DUPLICATE_VERTEX,
  CPIP_NOT_SIMPLE,
  CPIP_INDEX_OUT_OF_RANGE,
  CPIP_ORACLE_DISAGREEMENT,
  CPIP_UNSUPPORTED_FORMAT,
  CPIP_PARSE_ERROR,
  CPIP_IO_ERROR,
  CPIP_INTERNAL_ERROR
} cpip_status;

typedef enum { CPIP_INSIDE = 0, CPIP_ON_BOUNDARY, CPIP_OUTSIDE } cpip_classification;
typedef enum { CPIP_ALGO_IMPROVED = 0, CPIP_ALGO_RAYCAST, CPIP_ALGO_FAN } cpip_algorithm;
typedef enum { CPIP_RULE_BAND_CHECKED = 0, CPIP_RULE_LITERAL } cpip_legality_rule;
typedef enum { CPIP_ORDER_WALK = 0, CPIP_ORDER_SHUFFLE } cpip_improved_order;
typedef enum { CPIP_FORMAT_CSV = 0, CPIP_FORMAT_JSON, CPIP_FORMAT_SVG } cpip_format;
typedef enum {
  CPIP_REPORT_POINT_SWEEP = 0,
  CPIP_REPORT_POLYGON_SWEEP,
  CPIP_REPORT_EXPECTATION
} cpip_report_kind;

typedef struct {
  size_t edges_tried;
  size_t intersection_tests;
  int has_legal_edge;
  size_t legal_edge;
  int exhausted_all;
} cpip_trial_stats;

typedef struct {
  /* NULL keeps the default size list. */
  const size_t* polygon_sizes;
  size_t num_polygon_sizes;
  size_t points_per_set;
  size_t num_point_sets;
  uint64_t seed;
  size_t warmup_rounds;
  size_t repetitions;
  size_t polygons_per_set;
  double polygon_radius;
  cpip_improved_order improved_order;
} cpip_bench_config;

typedef struct {
  cpip_algorithm algorithm;
  size_t set;
  uint64_t walltime_ns;
  double relative_time;
  uint64_t intersection_tests;
  uint64_t edges_tried;
  uint64_t exhausted_all;
  uint64_t disagreements;
} cpip_sweep_cell;

typedef struct {
  size_t n_edges;
  size_t sigma;
  int has_predicted;
  double predicted;
  double observed_mean_trials;
  double observed_mean_trials_shuffle;
  size_t runs;
  double relative_error; /* meaningful only when has_predicted */
  size_t exhausted_runs;
} cpip_expectation_row;

typedef struct {
  size_t cases;
  size_t max_n;
  uint64_t seed;
  cpip_legality_rule rule;
} cpip_fuzz_config;

typedef struct {
  size_t cases;
  size_t agreements;
  size_t disagreements;
  size_t exhausted_all;
  size_t counterexamples;
} cpip_fuzz_summary;

CPIP_API const char* cpip_version(void);
CPIP_API const char* cpip_last_error(void);
CPIP_API const char* cpip_status_name(cpip_status status);
CPIP_API const char* cpip_classification_name(cpip_classification c);
CPIP_API void cpip_string_free(char* s);

/* xy holds n interleaved (x, y) pairs. */
CPIP_API cpip_status cpip_polygon_create(const double* xy, size_t n, cpip_polygon** out);
CPIP_API cpip_status cpip_polygon_from_json(const char* text, cpip_polygon** out);
CPIP_API cpip_status cpip_polygon_load(const char* path, cpip_polygon** out);
CPIP_API cpip_status cpip_polygon_random(size_t n, uint64_t seed, double radius,
                                         cpip_polygon** out);
CPIP_API void cpip_polygon_destroy(cpip_polygon* poly);
CPIP_API size_t cpip_polygon_size(const cpip_polygon* poly);
CPIP_API cpip_status cpip_polygon_vertex(const cpip_polygon* poly, size_t i, double* x,
                                         double* y);
CPIP_API cpip_status cpip_polygon_to_json(const cpip_polygon* poly, char** out);
CPIP_API cpip_status cpip_polygon_save(const cpip_polygon* poly, const char* path);

/* The improved algorithm tries edges in the permutation policy_seed selects.
 * stats may be NULL. */
CPIP_API cpip_status cpip_classify(const cpip_polygon* poly, double x, double y,
                                   cpip_algorithm algorithm, uint64_t policy_seed,
                                   cpip_legality_rule rule, cpip_classification* out,
                                   cpip_trial_stats* stats);
CPIP_API cpip_status cpip_sigma(const cpip_polygon* poly, double x, double y,
                                cpip_legality_rule rule, size_t* out);

CPIP_API void cpip_bench_config_init(cpip_bench_config* cfg);
CPIP_API cpip_status cpip_bench_point_sweep(const cpip_polygon* poly,
                                            const cpip_bench_config* cfg, cpip_report** out);
/* Query point: centroid + fraction * (random vertex - centroid). */
CPIP_API cpip_status cpip_bench_polygon_sweep(const cpip_bench_config* cfg, double fraction,
                                              cpip_report** out);
CPIP_API cpip_status cpip_bench_expectation(const cpip_bench_config* cfg, size_t with_legal,
                                            size_t without_legal, size_t runs, size_t max_n,
                                            cpip_report** out);
CPIP_API cpip_report_kind cpip_report_kind_of(const cpip_report* report);
/* Sweeps: number of sets. Expectation: number of rows. */
CPIP_API size_t cpip_report_length(const cpip_report* report);
CPIP_API cpip_status cpip_report_cell(const cpip_report* report, cpip_algorithm algorithm,
                                      size_t set, cpip_sweep_cell* out);
CPIP_API cpip_status cpip_report_expectation_row(const cpip_report* report, size_t row,
                                                 cpip_expectation_row* out);
CPIP_API cpip_status cpip_report_emit(const cpip_report* report, cpip_format format,
                                      char** out);
CPIP_API void cpip_report_destroy(cpip_report* report);

CPIP_API void cpip_fuzz_config_init(cpip_fuzz_config* cfg);
/* repro_json (may be NULL) receives the minimized counterexamples as JSON, or
 * NULL when every case agreed. */
CPIP_API cpip_status cpip_fuzz(const cpip_fuzz_config* cfg, cpip_fuzz_summary* out,
                               char** repro_json);

#ifdef __cplusplus
}
#endif

#endif  /* CONVEXPIP_H_ */

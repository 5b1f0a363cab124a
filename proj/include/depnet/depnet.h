// Copyright 2026 The depnet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to libdepnet.
 *
 * Every function returns a dn_status. On failure a message describing the
 * problem is available from dn_last_error() on the same thread until the next
 * call into the library. Node labels are 1-based. Strings returned through
 * `char**` out-parameters are owned by the caller and released with
 * dn_string_free(); handles are released with their *_free function.
 */
#ifndef DEPNET_DEPNET_H_
#define DEPNET_DEPNET_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define DN_API __declspec(dllexport)
#else
#define DN_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dn_status {
  DN_OK = 0,
  DN_ERR_INVALID_ARGUMENT = 1,
  DN_ERR_PARSE = 2,
  DN_ERR_KIND_MISMATCH = 3,
  DN_ERR_UNDEFINED = 4,
  DN_ERR_TOO_LARGE = 5,
  DN_ERR_PRECONDITION = 6,
  DN_ERR_INTERNAL = 99
} dn_status;

typedef struct dn_graph dn_graph;   /* graph plus optional block structure */
typedef struct dn_model dn_model;   /* ModelSpec */
typedef struct dn_report dn_report; /* named text artifacts plus counters */

DN_API const char* dn_version(void);
DN_API const char* dn_last_error(void);
DN_API const char* dn_status_name(dn_status status);
DN_API void dn_string_free(char* s);

/* Graphs. */
DN_API dn_status dn_graph_new(int n, int directed, dn_graph** out);
DN_API dn_status dn_graph_parse(const char* edge_list, dn_graph** out);
DN_API dn_status dn_graph_serialize(const dn_graph* g, char** out);
DN_API dn_status dn_graph_set_edge(dn_graph* g, int i, int j, int present);
DN_API dn_status dn_graph_has_edge(const dn_graph* g, int i, int j, int* out);
DN_API dn_status dn_graph_node_count(const dn_graph* g, int* out);
DN_API dn_status dn_graph_edge_count(const dn_graph* g, int64_t* out);
DN_API dn_status dn_graph_is_directed(const dn_graph* g, int* out);
DN_API void dn_graph_free(dn_graph* g);

/* Empirical distribution of `kind` ("degree", "out_degree", "in_degree",
 * "esp", "geodesic", "within_block_out_degree") as CSV kind,M,k,value.
 * `respondents` is a node list (one label per line) or NULL for all nodes;
 * the within-block kind needs a graph parsed with a blocks section. */
DN_API dn_status dn_distribution_csv(const dn_graph* g, const char* kind, const char* respondents,
                                     char** out_csv);
/* The distribution values only; `values` must hold `capacity` doubles.
 * `*size` receives the bin count (also on DN_ERR_INVALID_ARGUMENT when the
 * buffer is too small). */
DN_API dn_status dn_distribution(const dn_graph* g, const char* kind, double* values,
                                 size_t capacity, size_t* size, int64_t* basis_count);

/* Models, from the JSON schema documented in the README. */
DN_API dn_status dn_model_from_json(const char* json, dn_model** out);
DN_API dn_status dn_model_to_json(const dn_model* m, char** out);
DN_API dn_status dn_model_sample(const dn_model* m, uint64_t seed, dn_graph** out);
DN_API void dn_model_free(dn_model* m);

/* Reports. Artifact names depend on the producing call. */
DN_API size_t dn_report_artifact_count(const dn_report* r);
DN_API const char* dn_report_artifact_name(const dn_report* r, size_t index);
/* NULL when the report has no artifact of that name. */
DN_API const char* dn_report_artifact(const dn_report* r, const char* name);
/* Named numeric result; DN_ERR_INVALID_ARGUMENT when absent. */
DN_API dn_status dn_report_value(const dn_report* r, const char* name, double* out);
DN_API void dn_report_free(dn_report* r);

/* Exact verification on an enumerable model. `support` is a restriction id
 * ("all", "edges=m", "edges=lo..hi", "degree=lo..hi") or NULL; it affects
 * the dependence profile only. Artifacts: "profile.csv", "lemma.csv",
 * "theta_star.csv". Values: "violations", "negative_conc2", "C_N", "Delta_N"
 * (absent when undefined), "prop1_bound", "D_N", "M". */
DN_API dn_status dn_oracle_verify(const dn_model* m, const char* kind, const double* t_grid,
                                  size_t t_count, const char* support, dn_report** out);

/* Bound calculators; input and output JSON as documented in the README.
 * Artifacts: "report.json", "summary.txt". */
DN_API dn_status dn_bounds(const char* input_json, dn_report** out);

/* Studies. `config_json` may be NULL for defaults. A non-NULL `seed`
 * overrides the config's seed; threads <= 0 means all hardware threads.
 * Artifacts: "rows.csv", "theta_star.csv", "meta.json" and, for study 2,
 * "expected_degree.csv". */
DN_API dn_status dn_study1(const char* config_json, const uint64_t* seed, int threads,
                           dn_report** out);
DN_API dn_status dn_study2(const char* config_json, const uint64_t* seed, int threads,
                           dn_report** out);

/* Synthetic class network. Artifacts: "network.txt" (edge list with blocks),
 * "respondents.txt". */
DN_API dn_status dn_generate_classes(int block_count, int size_low, int size_high,
                                     double response_rate, uint64_t seed, dn_report** out);

/* Block subsampling on a network with blocks. `respondents` may be NULL
 * (everyone responds). Artifacts: "rows.csv", "bins.csv", "reference.csv". */
DN_API dn_status dn_subsample(const dn_graph* network, const char* respondents,
                              const char* config_json, const uint64_t* seed, int threads,
                              dn_report** out);

/* Boxplot of `value_column` grouped by `group_column`. `filters` is a
 * comma-separated list of column=value conditions or NULL. */
DN_API dn_status dn_plot_svg(const char* csv, const char* group_column, const char* value_column,
                             const char* filters, const char* title, char** out_svg);

#ifdef __cplusplus
}
#endif

#endif  // DEPNET_DEPNET_H_

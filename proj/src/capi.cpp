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

#include "depnet/depnet.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "depnet/bounds_json.hpp"
#include "depnet/error.hpp"
#include "depnet/harness.hpp"
#include "depnet/model_json.hpp"
#include "depnet/oracle.hpp"

struct dn_graph {
  depnet::Network net;
};

struct dn_model {
  depnet::ModelSpec spec;
};

struct dn_report {
  std::vector<std::pair<std::string, std::string>> artifacts;
  std::map<std::string, double> values;

  void add(std::string name, std::string text) {
    artifacts.emplace_back(std::move(name), std::move(text));
  }
};

namespace {

thread_local std::string g_last_error;

dn_status status_of(depnet::ErrorCode code) {
  switch (code) {
    case depnet::ErrorCode::kInvalidArgument:
      return DN_ERR_INVALID_ARGUMENT;
    case depnet::ErrorCode::kParse:
      return DN_ERR_PARSE;
    case depnet::ErrorCode::kKindMismatch:
      return DN_ERR_KIND_MISMATCH;
    case depnet::ErrorCode::kUndefined:
      return DN_ERR_UNDEFINED;
    case depnet::ErrorCode::kTooLarge:
      return DN_ERR_TOO_LARGE;
    case depnet::ErrorCode::kPrecondition:
      return DN_ERR_PRECONDITION;
  }
  return DN_ERR_INTERNAL;
}

template <class Fn>
dn_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return DN_OK;
  } catch (const depnet::Error& e) {
    g_last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return DN_ERR_INTERNAL;
}

void need(const void* p, const char* name) {
  if (p == nullptr) depnet::fail(depnet::ErrorCode::kInvalidArgument, std::string(name) + " is NULL");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

int node_index(const depnet::Graph& g, int label) {
  if (label < 1 || label > g.n())
    depnet::fail(depnet::ErrorCode::kInvalidArgument,
                 "node " + std::to_string(label) + " is out of range 1.." + std::to_string(g.n()));
  return label - 1;
}

depnet::Statistic statistic_for(const dn_graph* g, const char* kind, const char* respondents) {
  need(kind, "kind");
  depnet::Statistic stat(depnet::parse_kind(kind));
  if (stat.kind == depnet::StatisticKind::kWithinBlockOutDegree) {
    if (!g->net.blocks)
      depnet::fail(depnet::ErrorCode::kInvalidArgument,
                   "within-block out-degree needs a graph with a blocks section");
    std::optional<std::vector<int>> r;
    if (respondents != nullptr) r = depnet::parse_node_list(respondents, g->net.graph.n());
    stat = depnet::Statistic::within_block(*g->net.blocks, std::move(r));
  } else if (respondents != nullptr) {
    depnet::fail(depnet::ErrorCode::kInvalidArgument,
                 "respondents apply only to within_block_out_degree");
  }
  return stat;
}

std::string csv_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string theta_csv(const std::vector<double>& theta) {
  std::string csv = "k,theta_star\n";
  for (std::size_t k = 0; k < theta.size(); ++k)
    csv += std::to_string(k) + "," + csv_number(theta[k]) + "\n";
  return csv;
}

void add_study(dn_report& r, const depnet::StudyResult& s) {
  r.add("rows.csv", depnet::study_csv(s.rows));
  r.add("theta_star.csv", depnet::theta_summary_csv(s.theta_star));
  r.add("meta.json", s.metadata_json);
  if (!s.expected_degree.empty())
    r.add("expected_degree.csv", depnet::expected_degree_csv(s.expected_degree));
}

}  // namespace

extern "C" {

const char* dn_version(void) { return "1.0.0"; }

const char* dn_last_error(void) { return g_last_error.c_str(); }

const char* dn_status_name(dn_status status) {
  switch (status) {
    case DN_OK:
      return "ok";
    case DN_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case DN_ERR_PARSE:
      return "parse error";
    case DN_ERR_KIND_MISMATCH:
      return "kind mismatch";
    case DN_ERR_UNDEFINED:
      return "undefined";
    case DN_ERR_TOO_LARGE:
      return "too large";
    case DN_ERR_PRECONDITION:
      return "precondition violated";
    case DN_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

void dn_string_free(char* s) { std::free(s); }

dn_status dn_graph_new(int n, int directed, dn_graph** out) {
  return guarded([&] {
    need(out, "out");
    depnet::require(n >= 1, "node count must be at least 1");
    *out = new dn_graph{{depnet::Graph::empty(n, directed != 0), std::nullopt}};
  });
}

dn_status dn_graph_parse(const char* edge_list, dn_graph** out) {
  return guarded([&] {
    need(edge_list, "edge_list");
    need(out, "out");
    *out = new dn_graph{depnet::parse_edge_list(edge_list)};
  });
}

dn_status dn_graph_serialize(const dn_graph* g, char** out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = dup(depnet::serialize_edge_list(g->net.graph, g->net.blocks ? &*g->net.blocks : nullptr));
  });
}

dn_status dn_graph_set_edge(dn_graph* g, int i, int j, int present) {
  return guarded([&] {
    need(g, "graph");
    const int a = node_index(g->net.graph, i);
    const int b = node_index(g->net.graph, j);
    g->net.graph = depnet::GraphBuilder(g->net.graph).set_edge(a, b, present != 0).build();
  });
}

dn_status dn_graph_has_edge(const dn_graph* g, int i, int j, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->net.graph.has_edge(node_index(g->net.graph, i), node_index(g->net.graph, j)) ? 1 : 0;
  });
}

dn_status dn_graph_node_count(const dn_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->net.graph.n();
  });
}

dn_status dn_graph_edge_count(const dn_graph* g, int64_t* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = static_cast<int64_t>(g->net.graph.edge_count());
  });
}

dn_status dn_graph_is_directed(const dn_graph* g, int* out) {
  return guarded([&] {
    need(g, "graph");
    need(out, "out");
    *out = g->net.graph.directed() ? 1 : 0;
  });
}

void dn_graph_free(dn_graph* g) { delete g; }

dn_status dn_distribution_csv(const dn_graph* g, const char* kind, const char* respondents,
                              char** out_csv) {
  return guarded([&] {
    need(g, "graph");
    need(out_csv, "out_csv");
    const auto stat = statistic_for(g, kind, respondents);
    *out_csv = dup(depnet::distribution_csv(depnet::compute_distribution(g->net.graph, stat)));
  });
}

dn_status dn_distribution(const dn_graph* g, const char* kind, double* values, size_t capacity,
                          size_t* size, int64_t* basis_count) {
  return guarded([&] {
    need(g, "graph");
    need(size, "size");
    const auto d = depnet::compute_distribution(g->net.graph, statistic_for(g, kind, nullptr));
    *size = d.size();
    if (basis_count != nullptr) *basis_count = static_cast<int64_t>(d.basis_count);
    if (capacity < d.size())
      depnet::fail(depnet::ErrorCode::kInvalidArgument, "output buffer is too small");
    need(values, "values");
    std::copy(d.values.begin(), d.values.end(), values);
  });
}

dn_status dn_model_from_json(const char* json, dn_model** out) {
  return guarded([&] {
    need(json, "json");
    need(out, "out");
    *out = new dn_model{depnet::model_from_json(json)};
  });
}

dn_status dn_model_to_json(const dn_model* m, char** out) {
  return guarded([&] {
    need(m, "model");
    need(out, "out");
    *out = dup(depnet::model_to_json(m->spec));
  });
}

dn_status dn_model_sample(const dn_model* m, uint64_t seed, dn_graph** out) {
  return guarded([&] {
    need(m, "model");
    need(out, "out");
    depnet::Rng rng(seed);
    depnet::Graph g = depnet::sample(m->spec, rng);
    std::optional<depnet::BlockStructure> blocks;
    if (auto* ld = std::get_if<depnet::LocalDependence>(&m->spec.model)) blocks = ld->blocks;
    *out = new dn_graph{{std::move(g), std::move(blocks)}};
  });
}

void dn_model_free(dn_model* m) { delete m; }

size_t dn_report_artifact_count(const dn_report* r) {
  return r == nullptr ? 0 : r->artifacts.size();
}

const char* dn_report_artifact_name(const dn_report* r, size_t index) {
  if (r == nullptr || index >= r->artifacts.size()) return nullptr;
  return r->artifacts[index].first.c_str();
}

const char* dn_report_artifact(const dn_report* r, const char* name) {
  if (r == nullptr || name == nullptr) return nullptr;
  for (const auto& [key, text] : r->artifacts)
    if (key == name) return text.c_str();
  return nullptr;
}

dn_status dn_report_value(const dn_report* r, const char* name, double* out) {
  return guarded([&] {
    need(r, "report");
    need(name, "name");
    need(out, "out");
    auto it = r->values.find(name);
    if (it == r->values.end())
      depnet::fail(depnet::ErrorCode::kInvalidArgument, std::string("report has no value '") +
                                                            name + "'");
    *out = it->second;
  });
}

void dn_report_free(dn_report* r) { delete r; }

dn_status dn_oracle_verify(const dn_model* m, const char* kind, const double* t_grid,
                           size_t t_count, const char* support, dn_report** out) {
  return guarded([&] {
    need(m, "model");
    need(kind, "kind");
    need(out, "out");
    depnet::require(t_count == 0 || t_grid != nullptr, "t_grid is NULL");
    const depnet::Statistic stat(depnet::parse_kind(kind));
    const auto dist = depnet::exact_distribution(m->spec);
    std::vector<double> grid(t_grid, t_grid + t_count);
    auto report = std::make_unique<dn_report>();
    std::optional<depnet::SupportRestriction> restriction;
    if (support != nullptr) {
      restriction = depnet::SupportRestriction::parse(support);
      if (restriction->type == depnet::SupportRestriction::Type::kAll) restriction.reset();
    }

    depnet::DependenceProfile profile;
    if (stat.kind == depnet::StatisticKind::kEsp) {
      // ESP has a random basis count: verify on the law conditioned on the
      // edge-count slice.
      if (!restriction || restriction->type != depnet::SupportRestriction::Type::kEdgeCount ||
          restriction->lo != restriction->hi)
        depnet::fail(depnet::ErrorCode::kPrecondition,
                     "esp needs a fixed edge-count support such as edges=3");
      const auto sliced = depnet::condition_on(dist, *restriction);
      const auto lemma = depnet::verify_lemma1(sliced, stat, grid);
      profile = lemma.profile;
      profile.support = restriction->id();
      report->add("lemma.csv", depnet::lemma_csv(lemma));
      report->values["violations"] = lemma.violations;
      report->values["negative_conc2"] = lemma.negative_conc2 ? 1 : 0;
      report->add("theta_star.csv", theta_csv(depnet::exact_theta_star(sliced, stat)));
    } else {
      const auto lemma = depnet::verify_lemma1(dist, stat, grid);
      profile = restriction ? depnet::compute_dependence_profile(dist, stat, restriction)
                            : lemma.profile;
      report->add("lemma.csv", depnet::lemma_csv(lemma));
      report->values["violations"] = lemma.violations;
      report->values["negative_conc2"] = lemma.negative_conc2 ? 1 : 0;
      report->add("theta_star.csv", theta_csv(depnet::exact_theta_star(dist, stat)));
    }
    report->add("profile.csv", depnet::profile_csv(profile));
    report->values["C_N"] = profile.c_n;
    if (profile.delta_n) report->values["Delta_N"] = *profile.delta_n;
    report->values["prop1_bound"] = profile.prop1_bound;
    report->values["D_N"] = profile.d_n;
    report->values["M"] = profile.basis_count;
    *out = report.release();
  });
}

dn_status dn_bounds(const char* input_json, dn_report** out) {
  return guarded([&] {
    need(input_json, "input_json");
    need(out, "out");
    const auto reports = depnet::evaluate_bounds_json(input_json);
    auto r = std::make_unique<dn_report>();
    r->add("report.json", depnet::bound_reports_json(reports));
    std::string summary;
    for (const auto& b : reports) summary += b.summary() + "\n";
    r->add("summary.txt", summary);
    r->values["violations"] = 0;
    *out = r.release();
  });
}

dn_status dn_study1(const char* config_json, const uint64_t* seed, int threads, dn_report** out) {
  return guarded([&] {
    need(out, "out");
    auto config = depnet::study1_config_from_json(config_json ? config_json : "");
    if (seed != nullptr) config.seed = *seed;
    config.threads = threads;
    auto r = std::make_unique<dn_report>();
    add_study(*r, depnet::run_study1(config));
    *out = r.release();
  });
}

dn_status dn_study2(const char* config_json, const uint64_t* seed, int threads, dn_report** out) {
  return guarded([&] {
    need(out, "out");
    auto config = depnet::study2_config_from_json(config_json ? config_json : "");
    if (seed != nullptr) config.seed = *seed;
    config.threads = threads;
    auto r = std::make_unique<dn_report>();
    const auto result = depnet::run_study2(config);
    add_study(*r, result);
    for (double alpha : config.alpha_list) {
      std::vector<double> x, y;
      for (const auto& e : result.expected_degree) {
        if (e.alpha != alpha) continue;
        x.push_back(e.n);
        y.push_back(e.mean_max_expected_degree);
      }
      if (x.size() >= 2)
        r->values["slope_alpha=" + csv_number(alpha)] = depnet::loglog_slope(x, y);
    }
    *out = r.release();
  });
}

dn_status dn_generate_classes(int block_count, int size_low, int size_high, double response_rate,
                              uint64_t seed, dn_report** out) {
  return guarded([&] {
    need(out, "out");
    const auto net =
        depnet::generate_synthetic_classes(block_count, size_low, size_high, response_rate, seed);
    auto r = std::make_unique<dn_report>();
    r->add("network.txt", depnet::serialize_edge_list(net.graph, &net.blocks));
    r->add("respondents.txt", depnet::serialize_node_list(net.respondents));
    r->values["nodes"] = net.graph.n();
    r->values["respondents"] = static_cast<double>(net.respondents.size());
    *out = r.release();
  });
}

dn_status dn_subsample(const dn_graph* network, const char* respondents, const char* config_json,
                       const uint64_t* seed, int threads, dn_report** out) {
  return guarded([&] {
    need(network, "network");
    need(out, "out");
    if (!network->net.blocks)
      depnet::fail(depnet::ErrorCode::kInvalidArgument, "subsampling needs a network with blocks");
    depnet::ClassNetwork net{network->net.graph, *network->net.blocks, {}};
    if (respondents != nullptr) {
      net.respondents = depnet::parse_node_list(respondents, net.graph.n());
    } else {
      net.respondents.resize(net.graph.n());
      for (int i = 0; i < net.graph.n(); ++i) net.respondents[i] = i;
    }
    auto config = depnet::subsample_config_from_json(config_json ? config_json : "");
    if (seed != nullptr) config.seed = *seed;
    config.threads = threads;
    const auto result = depnet::run_subsample(net, config);
    auto r = std::make_unique<dn_report>();
    r->add("rows.csv", depnet::study_csv(result.rows));
    r->add("bins.csv", depnet::subsample_bins_csv(result));
    r->add("reference.csv", depnet::distribution_csv(result.reference));
    *out = r.release();
  });
}

dn_status dn_plot_svg(const char* csv, const char* group_column, const char* value_column,
                      const char* filters, const char* title, char** out_svg) {
  return guarded([&] {
    need(csv, "csv");
    need(group_column, "group_column");
    need(value_column, "value_column");
    need(out_svg, "out_svg");
    std::vector<std::string> conds;
    if (filters != nullptr && *filters != '\0') {
      std::string all = filters;
      std::size_t start = 0;
      for (;;) {
        auto comma = all.find(',', start);
        conds.push_back(all.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    *out_svg = dup(depnet::emit_svg_boxplot(csv, group_column, value_column, conds,
                                            title ? title : ""));
  });
}

}  // extern "C"

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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depnet/graph.hpp"
#include "depnet/models.hpp"
#include "depnet/statistics.hpp"

namespace depnet {

// Largest enumerable state space, in free edge variables.
inline constexpr int kMaxFreeEdges = 20;

// Exact law of a random graph on a small node set. Edge variables whose
// probability is identically 0 or 1 are held fixed; the remaining "free"
// variables index the states: bit t of a state is free_edges[t].
struct ExactDistribution {
  int n = 0;
  bool directed = false;
  std::vector<Edge> free_edges;
  std::vector<Edge> fixed_edges;
  std::vector<double> probs;

  std::size_t state_count() const { return probs.size(); }
  Graph graph(std::uint64_t state) const;
};

// Enumerates and normalises (log-sum-exp) the model's law. Throws kTooLarge
// when more than kMaxFreeEdges edge variables are free.
ExactDistribution exact_distribution(const ModelSpec& spec);

// Restriction of the graph space used for conditioning and for the
// feasibility of conditioning prefixes. Identifiers:
//   "all", "edges=m", "edges=lo..hi", "degree=lo..hi" (every node degree,
//   out-degree when directed, within [lo, hi]).
struct SupportRestriction {
  enum class Type { kAll, kEdgeCount, kDegreeRange };
  Type type = Type::kAll;
  int lo = 0;
  int hi = 0;

  static SupportRestriction parse(std::string_view id);
  static SupportRestriction edge_count(int m) { return {Type::kEdgeCount, m, m}; }
  std::string id() const;
  bool contains(const Graph& g) const;
};

// The law conditioned on the restriction; throws when it has probability 0.
ExactDistribution condition_on(const ExactDistribution& dist, const SupportRestriction& r);

// Probability of the restricted set.
double support_probability(const ExactDistribution& dist, const SupportRestriction& r);

// Indicator array B[k][m] of one graph. ESP units are random, so ESP needs an
// edge-count restriction matching the graph.
struct EventMatrix {
  int bins = 0;
  int units = 0;
  std::vector<std::uint8_t> b;  // row-major bins x units

  int at(int k, int m) const { return b[static_cast<std::size_t>(k) * units + m]; }
};

EventMatrix event_matrix(const Graph& g, const Statistic& stat,
                         const std::optional<SupportRestriction>& support = {});

std::vector<double> exact_theta_star(const ExactDistribution& dist, const Statistic& stat);

// Exact P(||F_hat - theta*||_inf >= t). Deviations within 1e-12 of t count
// as reaching it.
double exact_tail_prob(const ExactDistribution& dist, const Statistic& stat, double t);

struct DependenceProfile {
  int basis_count = 0;  // M
  int bins = 0;         // p + 1
  double c_n = 0.0;
  std::optional<double> delta_n;  // absent when some P(B_ki = 1) == 0
  std::string delta_diagnostic;
  double prop1_bound = 0.0;
  std::vector<double> d_per_k;
  double d_n = 0.0;
  // delta[(k * M + i) * M + j], 0-based units, nonzero only for j > i.
  std::vector<double> delta;
  // Cov(B_ki, B_kj) at [(k * M + i) * M + j].
  std::vector<double> covariance;
  std::string support = "all";

  double delta_at(int k, int i, int j) const {
    return delta[(static_cast<std::size_t>(k) * basis_count + i) * basis_count + j];
  }
  double covariance_at(int k, int i, int j) const {
    return covariance[(static_cast<std::size_t>(k) * basis_count + i) * basis_count + j];
  }
  // min{C_N, Delta_N} with Delta_N falling back to C_N when absent.
  double min_signed() const;
  // min{|C_N|, |Delta_N|}.
  double min_abs() const;
};

// Exact dependence quantifiers. With a restriction, conditioning prefixes
// are feasible only when some positive-probability graph inside the
// restriction realises them; without one, when they have positive
// probability. Conditional laws are always taken under the full law.
DependenceProfile compute_dependence_profile(
    const ExactDistribution& dist, const Statistic& stat,
    const std::optional<SupportRestriction>& support = {});

struct LemmaRow {
  double t = 0.0;
  double exact_tail = 0.0;
  double bound_conc1 = 0.0;
  double bound_conc2 = 0.0;
  bool ok1 = true;
  bool ok2 = true;
};

struct LemmaReport {
  DependenceProfile profile;
  std::vector<LemmaRow> rows;
  int violations = 0;
  // 1 + min{C_N, Delta_N} < 0 makes the covariance bound negative.
  bool negative_conc2 = false;

  bool ok() const { return violations == 0; }
};

inline constexpr double kVerifySlack = 1e-12;

LemmaReport verify_lemma1(const ExactDistribution& dist, const Statistic& stat,
                          const std::vector<double>& t_grid);

std::string profile_csv(const DependenceProfile& profile);
std::string lemma_csv(const LemmaReport& report);

}  // namespace depnet

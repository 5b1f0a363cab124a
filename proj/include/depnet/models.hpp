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
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "depnet/graph.hpp"
#include "depnet/rng.hpp"
#include "depnet/statistics.hpp"

namespace depnet {

// Independent edges. `probs` is row-major n x n; symmetric when undirected,
// diagonal ignored.
struct BernoulliModel {
  std::vector<double> probs;
};

// Independent undirected edges with logit P(X_ij = 1) = theta_i + theta_j.
struct BetaModel {
  std::vector<double> theta;
};

// Which form of the geometric GWESP weights to use. kAsPrinted puts
// exp(theta3) inside the bracket; kStandard uses exp(-theta3), the form
// common in the ERGM literature.
enum class EtaConvention { kAsPrinted, kStandard };

std::string_view convention_name(EtaConvention c);
EtaConvention parse_convention(std::string_view name);

struct McmcSchedule {
  std::int64_t burn_in = 0;  // toggles discarded before the first sample
  std::int64_t thin = 0;     // toggles between retained samples
};

// Defaults: burn-in 100 N^2 toggles, thinning 10 N^2 toggles.
McmcSchedule default_schedule(int n);

// Edge + geometrically weighted edgewise-shared-partner model on undirected
// graphs: log weight theta1 * |E| + sum_k eta_k(theta2, theta3) * ESP_k.
struct CurvedErgm {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double theta3 = 0.0;
  EtaConvention convention = EtaConvention::kAsPrinted;
  std::optional<McmcSchedule> schedule;
};

struct ModelSpec;

// Block-factorised model: each block's induced subgraph follows its own
// spec, edges between blocks are independent Bernoulli draws.
struct LocalDependence {
  BlockStructure blocks;
  std::vector<ModelSpec> within;
  BernoulliModel between;
};

struct ModelSpec {
  int n = 0;
  bool directed = false;
  std::variant<BernoulliModel, BetaModel, CurvedErgm, LocalDependence> model;
};

ModelSpec bernoulli_model(std::vector<double> probs, int n, bool directed);
ModelSpec homogeneous_bernoulli(int n, double p, bool directed);
ModelSpec beta_model(std::vector<double> theta);
ModelSpec curved_ergm(int n, CurvedErgm params);
ModelSpec local_dependence(BlockStructure blocks, std::vector<ModelSpec> within,
                           BernoulliModel between, bool directed);

// Throws on inconsistent dimensions, probabilities outside [0, 1],
// theta3 < 0, directed ERGMs, and block specs of the wrong size.
void validate(const ModelSpec& spec);

// Edge-probability matrix of an independent-edge spec (Bernoulli or beta).
std::vector<double> edge_probabilities(const ModelSpec& spec);

std::vector<double> beta_model_probs(std::span<const double> theta);

// Row sums of an edge-probability matrix (expected out-degrees).
std::vector<double> expected_degrees(std::span<const double> probs, int n);

Graph sample_bernoulli(std::span<const double> probs, int n, bool directed, Rng& rng);

double gwesp_eta(int k, double theta2, double theta3, EtaConvention convention);
// eta_0 = 0 followed by eta_1..eta_{n-2}.
std::vector<double> gwesp_eta_table(int n, const CurvedErgm& params);

double ergm_log_weight(const Graph& g, const CurvedErgm& params);

// Metropolis chain over undirected graphs on n nodes with uniform single
// pair toggles, started from the empty graph. Change statistics are computed
// from the neighbourhoods of the toggled pair only.
class ErgmChain {
 public:
  ErgmChain(const CurvedErgm& params, int n, std::uint64_t seed);

  void run(std::int64_t steps);
  // One proposal; returns whether it was accepted.
  bool step();

  // Change in log weight if (i, j) were toggled.
  double toggle_delta(int i, int j) const;
  void toggle(int i, int j);
  bool has_edge(int i, int j) const;

  Graph graph() const;
  std::int64_t proposals() const { return proposals_; }
  std::int64_t accepted() const { return accepted_; }

 private:
  int common(int a, int b) const;

  int n_;
  int words_;
  double theta1_;
  std::vector<double> eta_;
  std::vector<std::uint64_t> rows_;
  Rng rng_;
  std::int64_t proposals_ = 0;
  std::int64_t accepted_ = 0;
};

std::vector<Graph> mcmc_sample_ergm(const CurvedErgm& params, int n, std::int64_t burn_in,
                                    std::int64_t thin, int count, std::uint64_t seed);

Graph sample_local_dependence(const ModelSpec& spec, Rng& rng);

// One draw from any spec. Curved ERGMs run a fresh chain with the spec's
// schedule (or the default one).
Graph sample(const ModelSpec& spec, Rng& rng);

// `count` draws; draw i depends only on (seed, i, chains), never on the
// thread count. Curved ERGMs run `chains` independent chains (0 = one chain
// per draw) that each yield their share of draws after burn-in and thinning.
std::vector<Graph> sample_many(const ModelSpec& spec, int count, std::uint64_t seed,
                               int threads = 1, int chains = 0);

struct ThetaStarEstimate {
  StatisticKind kind = StatisticKind::kDegree;
  std::vector<double> mean;
  std::vector<double> std_errors;
  int n_samples = 0;  // replicates used
  int skipped = 0;    // replicates without a defined distribution (ESP, no edges)

  double max_std_error() const;
};

// Per-bin mean and standard error (sample sd / sqrt(n)) over the graphs.
// Graphs where the distribution is undefined are skipped and counted.
ThetaStarEstimate summarize_theta_star(std::span<const Graph> graphs, const Statistic& stat);

ThetaStarEstimate estimate_theta_star(const ModelSpec& spec, const Statistic& stat,
                                      int n_samples, std::uint64_t seed, int threads = 1);

}  // namespace depnet

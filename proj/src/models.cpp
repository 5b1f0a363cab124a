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

#include "depnet/models.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "depnet/error.hpp"
#include "depnet/parallel.hpp"

namespace depnet {

std::string_view convention_name(EtaConvention c) {
  return c == EtaConvention::kAsPrinted ? "as_printed" : "standard";
}

EtaConvention parse_convention(std::string_view name) {
  if (name == "as_printed") return EtaConvention::kAsPrinted;
  if (name == "standard") return EtaConvention::kStandard;
  fail(ErrorCode::kInvalidArgument, "unknown eta convention '" + std::string(name) + "'");
}

McmcSchedule default_schedule(int n) {
  const std::int64_t n2 = static_cast<std::int64_t>(n) * n;
  return {100 * n2, 10 * n2};
}

ModelSpec bernoulli_model(std::vector<double> probs, int n, bool directed) {
  ModelSpec spec{n, directed, BernoulliModel{std::move(probs)}};
  validate(spec);
  return spec;
}

ModelSpec homogeneous_bernoulli(int n, double p, bool directed) {
  std::vector<double> probs(static_cast<std::size_t>(n) * n, p);
  for (int i = 0; i < n; ++i) probs[i * n + i] = 0.0;
  return bernoulli_model(std::move(probs), n, directed);
}

ModelSpec beta_model(std::vector<double> theta) {
  const int n = static_cast<int>(theta.size());
  ModelSpec spec{n, false, BetaModel{std::move(theta)}};
  validate(spec);
  return spec;
}

ModelSpec curved_ergm(int n, CurvedErgm params) {
  ModelSpec spec{n, false, params};
  validate(spec);
  return spec;
}

ModelSpec local_dependence(BlockStructure blocks, std::vector<ModelSpec> within,
                           BernoulliModel between, bool directed) {
  const int n = blocks.node_count();
  ModelSpec spec{n, directed,
                 LocalDependence{std::move(blocks), std::move(within), std::move(between)}};
  validate(spec);
  return spec;
}

namespace {

void validate_probs(const std::vector<double>& probs, int n, bool directed) {
  require(probs.size() == static_cast<std::size_t>(n) * n,
          "probability matrix must be n x n (n = " + std::to_string(n) + ")");
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      double p = probs[i * n + j];
      require(p >= 0.0 && p <= 1.0, "edge probability outside [0, 1]");
      if (!directed)
        require(p == probs[j * n + i], "undirected probability matrix must be symmetric");
    }
  }
}

double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  double e = std::exp(x);
  return e / (1.0 + e);
}

}  // namespace

void validate(const ModelSpec& spec) {
  require(spec.n >= 1, "model needs at least one node");
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BernoulliModel>) {
          validate_probs(m.probs, spec.n, spec.directed);
        } else if constexpr (std::is_same_v<T, BetaModel>) {
          require(!spec.directed, "the beta model is undirected");
          require(static_cast<int>(m.theta.size()) == spec.n, "theta length must equal n");
          for (double t : m.theta) require(std::isfinite(t), "theta entries must be finite");
        } else if constexpr (std::is_same_v<T, CurvedErgm>) {
          require(!spec.directed, "curved ERGMs are undirected");
          require(m.theta3 >= 0.0, "theta3 must be non-negative");
          require(std::isfinite(m.theta1) && std::isfinite(m.theta2) && std::isfinite(m.theta3),
                  "ERGM parameters must be finite");
          if (m.schedule)
            require(m.schedule->burn_in >= 0 && m.schedule->thin >= 1,
                    "MCMC schedule needs burn_in >= 0 and thin >= 1");
        } else {
          require(m.blocks.node_count() == spec.n, "block structure must cover n nodes");
          require(static_cast<int>(m.within.size()) == m.blocks.block_count(),
                  "missing within-block spec: need one per block");
          for (int b = 0; b < m.blocks.block_count(); ++b) {
            const ModelSpec& w = m.within[b];
            require(w.n == static_cast<int>(m.blocks.members(b).size()),
                    "within-block spec " + std::to_string(b + 1) + " has the wrong node count");
            require(w.directed == spec.directed, "within-block spec directedness mismatch");
            validate(w);
          }
          validate_probs(m.between.probs, spec.n, spec.directed);
        }
      },
      spec.model);
}

std::vector<double> beta_model_probs(std::span<const double> theta) {
  const int n = static_cast<int>(theta.size());
  std::vector<double> probs(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      probs[i * n + j] = probs[j * n + i] = logistic(theta[i] + theta[j]);
  return probs;
}

std::vector<double> edge_probabilities(const ModelSpec& spec) {
  if (auto* b = std::get_if<BernoulliModel>(&spec.model)) return b->probs;
  if (auto* b = std::get_if<BetaModel>(&spec.model)) return beta_model_probs(b->theta);
  fail(ErrorCode::kInvalidArgument, "model does not have independent edges");
}

std::vector<double> expected_degrees(std::span<const double> probs, int n) {
  require(probs.size() == static_cast<std::size_t>(n) * n, "probability matrix must be n x n");
  std::vector<double> deg(n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) deg[i] += probs[i * n + j];
  return deg;
}

Graph sample_bernoulli(std::span<const double> probs, int n, bool directed, Rng& rng) {
  require(probs.size() == static_cast<std::size_t>(n) * n,
          "probability matrix must be n x n (n = " + std::to_string(n) + ")");
  GraphBuilder b(n, directed);
  for (int i = 0; i < n; ++i) {
    for (int j = directed ? 0 : i + 1; j < n; ++j) {
      if (i == j) continue;
      if (rng.bernoulli(probs[i * n + j])) b.set_edge(i, j);
    }
  }
  return b.build();
}

double gwesp_eta(int k, double theta2, double theta3, EtaConvention convention) {
  require(k >= 1, "eta_k is defined for k >= 1");
  const double inner = convention == EtaConvention::kAsPrinted ? std::exp(theta3)
                                                               : std::exp(-theta3);
  return theta2 * std::exp(theta3) * (1.0 - std::pow(1.0 - inner, k));
}

std::vector<double> gwesp_eta_table(int n, const CurvedErgm& params) {
  std::vector<double> eta(std::max(n - 1, 1), 0.0);
  for (int k = 1; k < static_cast<int>(eta.size()); ++k)
    eta[k] = gwesp_eta(k, params.theta2, params.theta3, params.convention);
  return eta;
}

double ergm_log_weight(const Graph& g, const CurvedErgm& params) {
  require(!g.directed(), "curved ERGM weights need an undirected graph");
  const auto eta = gwesp_eta_table(g.n(), params);
  double w = params.theta1 * static_cast<double>(g.edge_count());
  auto ev = unit_events(g, StatisticKind::kEsp);
  for (int k : ev.category) w += eta[k];
  return w;
}

ErgmChain::ErgmChain(const CurvedErgm& params, int n, std::uint64_t seed)
    : n_(n),
      words_((n + 63) / 64),
      theta1_(params.theta1),
      eta_(gwesp_eta_table(n, params)),
      rows_(static_cast<std::size_t>(n) * words_, 0),
      rng_(seed) {
  require(n >= 2, "ERGM chain needs at least two nodes");
}

bool ErgmChain::has_edge(int i, int j) const {
  return (rows_[static_cast<std::size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
}

int ErgmChain::common(int a, int b) const {
  const std::uint64_t* ra = &rows_[static_cast<std::size_t>(a) * words_];
  const std::uint64_t* rb = &rows_[static_cast<std::size_t>(b) * words_];
  int c = 0;
  for (int w = 0; w < words_; ++w) c += std::popcount(ra[w] & rb[w]);
  return c;
}

double ErgmChain::toggle_delta(int i, int j) const {
  // Work out the gain of adding (i, j) to the graph without it; removal is
  // the negation. Adding (i, j) creates one edge with sp(i, j) partners and
  // gives every edge (i, h), (j, h) with h a common neighbour one more partner.
  const bool present = has_edge(i, j);
  const int drop = present ? 1 : 0;
  double d = theta1_ + eta_[common(i, j)];
  const std::uint64_t* ri = &rows_[static_cast<std::size_t>(i) * words_];
  const std::uint64_t* rj = &rows_[static_cast<std::size_t>(j) * words_];
  for (int w = 0; w < words_; ++w) {
    for (std::uint64_t m = ri[w] & rj[w]; m != 0; m &= m - 1) {
      const int h = w * 64 + std::countr_zero(m);
      const int si = common(i, h) - drop;
      const int sj = common(j, h) - drop;
      d += eta_[si + 1] - eta_[si] + eta_[sj + 1] - eta_[sj];
    }
  }
  return present ? -d : d;
}

void ErgmChain::toggle(int i, int j) {
  rows_[static_cast<std::size_t>(i) * words_ + j / 64] ^= std::uint64_t{1} << (j % 64);
  rows_[static_cast<std::size_t>(j) * words_ + i / 64] ^= std::uint64_t{1} << (i % 64);
}

bool ErgmChain::step() {
  const int i = static_cast<int>(rng_.below(n_));
  int j = static_cast<int>(rng_.below(n_ - 1));
  if (j >= i) ++j;
  ++proposals_;
  const double d = toggle_delta(i, j);
  if (d >= 0.0 || rng_.uniform() < std::exp(d)) {
    toggle(i, j);
    ++accepted_;
    return true;
  }
  return false;
}

void ErgmChain::run(std::int64_t steps) {
  for (std::int64_t s = 0; s < steps; ++s) step();
}

Graph ErgmChain::graph() const {
  GraphBuilder b(n_, false);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) b.set_edge(i, j);
  return b.build();
}

std::vector<Graph> mcmc_sample_ergm(const CurvedErgm& params, int n, std::int64_t burn_in,
                                    std::int64_t thin, int count, std::uint64_t seed) {
  require(n >= 3, "MCMC sampling needs n >= 3");
  require(burn_in >= 1 && thin >= 1 && count >= 1, "burn_in, thin and count must be >= 1");
  ErgmChain chain(params, n, seed);
  chain.run(burn_in);
  std::vector<Graph> out;
  out.reserve(count);
  for (int s = 0; s < count; ++s) {
    if (s > 0) chain.run(thin);
    out.push_back(chain.graph());
  }
  return out;
}

Graph sample_local_dependence(const ModelSpec& spec, Rng& rng) {
  const auto* ld = std::get_if<LocalDependence>(&spec.model);
  require(ld != nullptr, "not a local-dependence spec");
  require(static_cast<int>(ld->within.size()) == ld->blocks.block_count(),
          "missing within-block spec: need one per block");
  const int n = spec.n;
  GraphBuilder b(n, spec.directed);
  for (int blk = 0; blk < ld->blocks.block_count(); ++blk) {
    const auto& members = ld->blocks.members(blk);
    Graph local = sample(ld->within[blk], rng);
    for (auto [i, j] : local.edges()) b.set_edge(members[i], members[j]);
  }
  const auto& between = ld->between.probs;
  for (int i = 0; i < n; ++i) {
    for (int j = spec.directed ? 0 : i + 1; j < n; ++j) {
      if (i == j || ld->blocks.block_of(i) == ld->blocks.block_of(j)) continue;
      const double p = between[i * n + j];
      if (p > 0.0 && rng.bernoulli(p)) b.set_edge(i, j);
    }
  }
  return b.build();
}

Graph sample(const ModelSpec& spec, Rng& rng) {
  return std::visit(
      [&](const auto& m) -> Graph {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, BernoulliModel>) {
          return sample_bernoulli(m.probs, spec.n, spec.directed, rng);
        } else if constexpr (std::is_same_v<T, BetaModel>) {
          return sample_bernoulli(beta_model_probs(m.theta), spec.n, false, rng);
        } else if constexpr (std::is_same_v<T, CurvedErgm>) {
          const McmcSchedule s = m.schedule.value_or(default_schedule(spec.n));
          ErgmChain chain(m, spec.n, rng());
          chain.run(s.burn_in);
          return chain.graph();
        } else {
          return sample_local_dependence(spec, rng);
        }
      },
      spec.model);
}

std::vector<Graph> sample_many(const ModelSpec& spec, int count, std::uint64_t seed,
                               int threads, int chains) {
  require(count >= 0, "sample count must be non-negative");
  std::vector<Graph> out(count);
  const auto* ergm = std::get_if<CurvedErgm>(&spec.model);
  if (ergm == nullptr || chains <= 0 || chains >= count) {
    parallel_for(count, threads, [&](std::size_t i) {
      Rng rng(derive_seed(seed, {i}));
      out[i] = sample(spec, rng);
    });
    return out;
  }
  // Chain c yields draws c, c + chains, c + 2 chains, ...
  const McmcSchedule s = ergm->schedule.value_or(default_schedule(spec.n));
  parallel_for(chains, threads, [&](std::size_t c) {
    ErgmChain chain(*ergm, spec.n, derive_seed(seed, {0xC4A1, c}));
    chain.run(s.burn_in);
    for (std::size_t i = c; i < out.size(); i += chains) {
      if (i != c) chain.run(s.thin);
      out[i] = chain.graph();
    }
  });
  return out;
}

double ThetaStarEstimate::max_std_error() const {
  double m = 0.0;
  for (double s : std_errors) m = std::max(m, s);
  return m;
}

ThetaStarEstimate summarize_theta_star(std::span<const Graph> graphs, const Statistic& stat) {
  ThetaStarEstimate est;
  est.kind = stat.kind;
  std::vector<double> sum, sumsq;
  for (const Graph& g : graphs) {
    EmpiricalDistribution d;
    try {
      d = compute_distribution(g, stat);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefined) throw;
      ++est.skipped;
      continue;
    }
    if (sum.empty()) {
      sum.assign(d.size(), 0.0);
      sumsq.assign(d.size(), 0.0);
    }
    for (std::size_t k = 0; k < d.size(); ++k) {
      sum[k] += d[k];
      sumsq[k] += d[k] * d[k];
    }
    ++est.n_samples;
  }
  if (est.n_samples == 0)
    fail(ErrorCode::kUndefined, "every replicate was skipped; theta* is undefined");
  if (est.n_samples < 2)
    fail(ErrorCode::kUndefined, "theta* estimate needs at least two usable replicates");
  const double n = est.n_samples;
  est.mean.resize(sum.size());
  est.std_errors.resize(sum.size());
  for (std::size_t k = 0; k < sum.size(); ++k) {
    const double mean = sum[k] / n;
    const double var = std::max(0.0, (sumsq[k] - n * mean * mean) / (n - 1.0));
    est.mean[k] = std::clamp(mean, 0.0, 1.0);
    est.std_errors[k] = std::sqrt(var / n);
  }
  return est;
}

ThetaStarEstimate estimate_theta_star(const ModelSpec& spec, const Statistic& stat,
                                      int n_samples, std::uint64_t seed, int threads) {
  require(n_samples >= 2, "theta* estimation needs at least two samples");
  auto graphs = sample_many(spec, n_samples, seed, threads, 16);
  return summarize_theta_star(graphs, stat);
}

}  // namespace depnet

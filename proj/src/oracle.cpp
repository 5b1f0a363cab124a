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

#include "depnet/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

#include "depnet/error.hpp"

namespace depnet {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// Log-weight of every state plus the edge layout that indexes them.
struct Enumeration {
  std::vector<Edge> free_edges;
  std::vector<Edge> fixed_edges;
  std::vector<double> log_weight;
};

void check_size(std::size_t free_count) {
  if (free_count > static_cast<std::size_t>(kMaxFreeEdges)) {
    fail(ErrorCode::kTooLarge,
         "state space 2^" + std::to_string(free_count) + " exceeds the enumeration limit 2^" +
             std::to_string(kMaxFreeEdges));
  }
}

std::vector<Edge> all_pairs(int n, bool directed) {
  std::vector<Edge> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = directed ? 0 : i + 1; j < n; ++j)
      if (i != j) pairs.emplace_back(i, j);
  return pairs;
}

Enumeration enumerate_independent(std::span<const double> probs, int n, bool directed,
                                  const std::vector<Edge>& pairs) {
  Enumeration e;
  std::vector<double> p_free;
  for (auto [i, j] : pairs) {
    const double p = probs[i * n + j];
    if (p >= 1.0) {
      e.fixed_edges.emplace_back(i, j);
    } else if (p > 0.0) {
      e.free_edges.emplace_back(i, j);
      p_free.push_back(p);
    }
  }
  check_size(e.free_edges.size());
  const std::size_t states = std::size_t{1} << e.free_edges.size();
  e.log_weight.assign(states, 0.0);
  for (std::size_t s = 0; s < states; ++s) {
    double lw = 0.0;
    for (std::size_t t = 0; t < p_free.size(); ++t)
      lw += ((s >> t) & 1u) ? std::log(p_free[t]) : std::log1p(-p_free[t]);
    e.log_weight[s] = lw;
  }
  (void)directed;
  return e;
}

Graph graph_from_state(int n, bool directed, const std::vector<Edge>& free_edges,
                       const std::vector<Edge>& fixed_edges, std::uint64_t state) {
  GraphBuilder b(n, directed);
  for (auto [i, j] : fixed_edges) b.set_edge(i, j);
  for (std::size_t t = 0; t < free_edges.size(); ++t)
    if ((state >> t) & 1u) b.set_edge(free_edges[t].first, free_edges[t].second);
  return b.build();
}

Enumeration enumerate(const ModelSpec& spec);

Enumeration enumerate_local(const ModelSpec& spec, const LocalDependence& ld) {
  Enumeration e;
  const int n = spec.n;
  struct BlockPart {
    std::size_t offset;
    std::size_t width;
    ExactDistribution dist;
  };
  std::vector<BlockPart> parts;
  for (int b = 0; b < ld.blocks.block_count(); ++b) {
    const auto& members = ld.blocks.members(b);
    ExactDistribution local = exact_distribution(ld.within[b]);
    BlockPart part{e.free_edges.size(), local.free_edges.size(), std::move(local)};
    for (auto [i, j] : part.dist.free_edges) e.free_edges.emplace_back(members[i], members[j]);
    for (auto [i, j] : part.dist.fixed_edges) e.fixed_edges.emplace_back(members[i], members[j]);
    check_size(e.free_edges.size());
    parts.push_back(std::move(part));
  }
  const std::size_t between_offset = e.free_edges.size();
  std::vector<double> p_between;
  for (auto [i, j] : all_pairs(n, spec.directed)) {
    if (ld.blocks.block_of(i) == ld.blocks.block_of(j)) continue;
    const double p = ld.between.probs[i * n + j];
    if (p >= 1.0) {
      e.fixed_edges.emplace_back(i, j);
    } else if (p > 0.0) {
      e.free_edges.emplace_back(i, j);
      p_between.push_back(p);
    }
  }
  check_size(e.free_edges.size());
  const std::size_t states = std::size_t{1} << e.free_edges.size();
  e.log_weight.assign(states, 0.0);
  for (std::size_t s = 0; s < states; ++s) {
    double lw = 0.0;
    for (const auto& part : parts) {
      const std::size_t sub = (s >> part.offset) & ((std::size_t{1} << part.width) - 1);
      const double p = part.dist.probs[sub];
      lw += p > 0.0 ? std::log(p) : kNegInf;
    }
    for (std::size_t t = 0; t < p_between.size(); ++t)
      lw += ((s >> (between_offset + t)) & 1u) ? std::log(p_between[t])
                                                : std::log1p(-p_between[t]);
    e.log_weight[s] = lw;
  }
  return e;
}

Enumeration enumerate(const ModelSpec& spec) {
  validate(spec);
  const auto pairs = all_pairs(spec.n, spec.directed);
  if (auto* b = std::get_if<BernoulliModel>(&spec.model))
    return enumerate_independent(b->probs, spec.n, spec.directed, pairs);
  if (auto* b = std::get_if<BetaModel>(&spec.model))
    return enumerate_independent(beta_model_probs(b->theta), spec.n, false, pairs);
  if (auto* c = std::get_if<CurvedErgm>(&spec.model)) {
    Enumeration e;
    e.free_edges = pairs;
    check_size(pairs.size());
    const std::size_t states = std::size_t{1} << pairs.size();
    e.log_weight.resize(states);
    for (std::size_t s = 0; s < states; ++s)
      e.log_weight[s] = ergm_log_weight(graph_from_state(spec.n, false, pairs, {}, s), *c);
    return e;
  }
  return enumerate_local(spec, std::get<LocalDependence>(spec.model));
}

// Units' categories for every positive-probability state, merged by
// identical category vectors.
struct EventGroup {
  std::vector<int> category;
  double prob = 0.0;
  bool in_support = false;
};

struct Aggregate {
  int units = 0;
  int bins = 0;
  std::vector<EventGroup> groups;
};

Aggregate aggregate(const ExactDistribution& dist, const Statistic& stat,
                    const std::optional<SupportRestriction>& support) {
  Aggregate agg;
  agg.bins = bin_count(stat, dist.n);
  std::map<std::vector<int>, std::size_t> index;
  bool first = true;
  for (std::size_t s = 0; s < dist.state_count(); ++s) {
    if (dist.probs[s] <= 0.0) continue;
    const Graph g = dist.graph(s);
    UnitEvents ev = unit_events(g, stat);
    const int m = static_cast<int>(ev.basis_count());
    if (first) {
      agg.units = m;
      first = false;
    } else if (m != agg.units) {
      fail(ErrorCode::kUndefined,
           std::string(kind_name(stat.kind)) +
               ": basis count varies across the support; condition on a fixed edge count");
    }
    const bool inside = !support || support->contains(g);
    auto [it, inserted] = index.try_emplace(ev.category, agg.groups.size());
    if (inserted) agg.groups.push_back({std::move(ev.category), 0.0, false});
    agg.groups[it->second].prob += dist.probs[s];
    agg.groups[it->second].in_support |= inside;
  }
  if (agg.units == 0)
    fail(ErrorCode::kUndefined, std::string(kind_name(stat.kind)) + ": basis count is zero");
  return agg;
}

std::vector<double> group_distribution(const EventGroup& g, int bins) {
  std::vector<double> f(bins, 0.0);
  const double inv = 1.0 / static_cast<double>(g.category.size());
  for (int c : g.category) f[c] += inv;
  return f;
}

std::vector<double> theta_star_of(const Aggregate& agg) {
  std::vector<double> theta(agg.bins, 0.0);
  for (const auto& g : agg.groups) {
    auto f = group_distribution(g, agg.bins);
    for (int k = 0; k < agg.bins; ++k) theta[k] += g.prob * f[k];
  }
  return theta;
}

double tail_of(const Aggregate& agg, const std::vector<double>& theta, double t) {
  double tail = 0.0;
  for (const auto& g : agg.groups)
    if (linf_error(group_distribution(g, agg.bins), theta) >= t - kVerifySlack) tail += g.prob;
  return std::min(tail, 1.0);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Graph ExactDistribution::graph(std::uint64_t state) const {
  return graph_from_state(n, directed, free_edges, fixed_edges, state);
}

ExactDistribution exact_distribution(const ModelSpec& spec) {
  Enumeration e = enumerate(spec);
  double top = kNegInf;
  for (double lw : e.log_weight) top = std::max(top, lw);
  require(std::isfinite(top), "model assigns zero weight to every graph");
  double z = 0.0;
  for (double lw : e.log_weight) z += std::exp(lw - top);
  ExactDistribution dist;
  dist.n = spec.n;
  dist.directed = spec.directed;
  dist.free_edges = std::move(e.free_edges);
  dist.fixed_edges = std::move(e.fixed_edges);
  dist.probs.resize(e.log_weight.size());
  for (std::size_t s = 0; s < e.log_weight.size(); ++s)
    dist.probs[s] = std::exp(e.log_weight[s] - top) / z;
  return dist;
}

SupportRestriction SupportRestriction::parse(std::string_view id) {
  if (id.empty() || id == "all") return {};
  auto eq = id.find('=');
  require(eq != std::string_view::npos, "bad support restriction '" + std::string(id) + "'");
  std::string_view key = id.substr(0, eq);
  std::string_view range = id.substr(eq + 1);
  auto to_int = [&](std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    require(ec == std::errc{} && ptr == s.data() + s.size() && v >= 0,
            "bad support restriction '" + std::string(id) + "'");
    return v;
  };
  SupportRestriction r;
  auto dots = range.find("..");
  if (dots == std::string_view::npos) {
    r.lo = r.hi = to_int(range);
  } else {
    r.lo = to_int(range.substr(0, dots));
    r.hi = to_int(range.substr(dots + 2));
  }
  require(r.lo <= r.hi, "empty support restriction range");
  if (key == "edges") {
    r.type = Type::kEdgeCount;
  } else if (key == "degree") {
    r.type = Type::kDegreeRange;
  } else {
    fail(ErrorCode::kInvalidArgument, "unknown support restriction '" + std::string(key) + "'");
  }
  return r;
}

std::string SupportRestriction::id() const {
  auto range = [this] {
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + ".." + std::to_string(hi);
  };
  switch (type) {
    case Type::kAll:
      return "all";
    case Type::kEdgeCount:
      return "edges=" + range();
    case Type::kDegreeRange:
      return "degree=" + range();
  }
  return "all";
}

bool SupportRestriction::contains(const Graph& g) const {
  switch (type) {
    case Type::kAll:
      return true;
    case Type::kEdgeCount: {
      const auto m = static_cast<int>(g.edge_count());
      return m >= lo && m <= hi;
    }
    case Type::kDegreeRange:
      for (int v = 0; v < g.n(); ++v)
        if (g.out_degree(v) < lo || g.out_degree(v) > hi) return false;
      return true;
  }
  return true;
}

ExactDistribution condition_on(const ExactDistribution& dist, const SupportRestriction& r) {
  ExactDistribution out = dist;
  double mass = 0.0;
  for (std::size_t s = 0; s < out.state_count(); ++s) {
    if (out.probs[s] > 0.0 && !r.contains(out.graph(s))) out.probs[s] = 0.0;
    mass += out.probs[s];
  }
  if (mass <= 0.0)
    fail(ErrorCode::kUndefined, "support restriction '" + r.id() + "' has probability zero");
  for (double& p : out.probs) p /= mass;
  return out;
}

double support_probability(const ExactDistribution& dist, const SupportRestriction& r) {
  double mass = 0.0;
  for (std::size_t s = 0; s < dist.state_count(); ++s)
    if (dist.probs[s] > 0.0 && r.contains(dist.graph(s))) mass += dist.probs[s];
  return mass;
}

EventMatrix event_matrix(const Graph& g, const Statistic& stat,
                         const std::optional<SupportRestriction>& support) {
  if (stat.kind == StatisticKind::kEsp) {
    if (!support || support->type != SupportRestriction::Type::kEdgeCount ||
        support->lo != support->hi) {
      fail(ErrorCode::kPrecondition,
           "ESP event matrices need a fixed edge-count support restriction");
    }
    require(support->contains(g), "graph lies outside the support restriction");
  }
  UnitEvents ev = unit_events(g, stat);
  EventMatrix em;
  em.bins = ev.bins;
  em.units = static_cast<int>(ev.basis_count());
  em.b.assign(static_cast<std::size_t>(em.bins) * em.units, 0);
  for (int m = 0; m < em.units; ++m)
    em.b[static_cast<std::size_t>(ev.category[m]) * em.units + m] = 1;
  return em;
}

std::vector<double> exact_theta_star(const ExactDistribution& dist, const Statistic& stat) {
  return theta_star_of(aggregate(dist, stat, std::nullopt));
}

double exact_tail_prob(const ExactDistribution& dist, const Statistic& stat, double t) {
  require(t > 0.0, "tail threshold must be positive");
  Aggregate agg = aggregate(dist, stat, std::nullopt);
  return tail_of(agg, theta_star_of(agg), t);
}

double DependenceProfile::min_signed() const {
  return delta_n ? std::min(c_n, *delta_n) : c_n;
}

double DependenceProfile::min_abs() const {
  return delta_n ? std::min(std::fabs(c_n), std::fabs(*delta_n)) : std::fabs(c_n);
}

DependenceProfile compute_dependence_profile(const ExactDistribution& dist,
                                             const Statistic& stat,
                                             const std::optional<SupportRestriction>& support) {
  const Aggregate agg = aggregate(dist, stat, support);
  const int units = agg.units;
  const int bins = agg.bins;
  require(units <= 30, "too many basis units for the exact dependence profile");

  DependenceProfile prof;
  prof.basis_count = units;
  prof.bins = bins;
  prof.support = support ? support->id() : "all";

  // Marginals P(cat_i = c) and pairwise joints P(cat_i = a, cat_j = b).
  const auto M = static_cast<std::size_t>(units);
  const auto K = static_cast<std::size_t>(bins);
  std::vector<double> marg(M * K, 0.0);
  std::vector<double> joint(M * M * K * K, 0.0);
  auto jidx = [&](std::size_t i, std::size_t j, std::size_t a, std::size_t b) {
    return ((i * M + j) * K + a) * K + b;
  };
  for (const auto& g : agg.groups) {
    for (std::size_t i = 0; i < M; ++i) {
      marg[i * K + g.category[i]] += g.prob;
      for (std::size_t j = 0; j < M; ++j)
        if (i != j) joint[jidx(i, j, g.category[i], g.category[j])] += g.prob;
    }
  }

  // Covariance form.
  prof.covariance.assign(K * M * M, 0.0);
  double c_sum = 0.0;
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t i = 0; i < M; ++i) {
      for (std::size_t j = 0; j < M; ++j) {
        if (i == j) {
          const double p = marg[i * K + k];
          prof.covariance[(k * M + i) * M + j] = p * (1.0 - p);
          continue;
        }
        const double cov = joint[jidx(i, j, k, k)] - marg[i * K + k] * marg[j * K + k];
        prof.covariance[(k * M + i) * M + j] = cov;
        c_sum += cov;
      }
    }
  }
  prof.c_n = c_sum / units;

  // Conditional-probability form; needs every P(B_ki = 1) > 0.
  bool positive = true;
  for (std::size_t i = 0; i < M && positive; ++i)
    for (std::size_t k = 0; k < K; ++k)
      if (marg[i * K + k] <= 0.0) {
        positive = false;
        prof.delta_diagnostic = "P(B_{" + std::to_string(k) + "," + std::to_string(i + 1) +
                                "} = 1) = 0; Delta_N is undefined";
        break;
      }
  if (positive) {
    double d_sum = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      for (std::size_t k = 0; k < K; ++k) {
        const double pi = marg[i * K + k];
        double inner = 0.0;
        for (std::size_t j = 0; j < M; ++j)
          if (j != i) inner += joint[jidx(i, j, k, k)] / pi - marg[j * K + k];
        d_sum += pi * inner;
      }
    }
    prof.delta_n = d_sum / units;
  }

  // Expected total-variation distance between conditional and marginal laws
  // of the whole event vector of unit j given that of unit i.
  double tv_sum = 0.0;
  for (std::size_t i = 0; i < M; ++i) {
    for (std::size_t j = 0; j < M; ++j) {
      if (i == j) continue;
      for (std::size_t a = 0; a < K; ++a) {
        const double pa = marg[i * K + a];
        if (pa <= 0.0) continue;
        double tv = 0.0;
        for (std::size_t b = 0; b < K; ++b)
          tv += std::fabs(joint[jidx(i, j, a, b)] / pa - marg[j * K + b]);
        tv_sum += pa * 0.5 * tv;
      }
    }
  }
  prof.prop1_bound = tv_sum / units;

  // Martingale coefficients. For each bin k and prefix length i, group the
  // indicator patterns of units 0..i-1 and compare conditional laws of later
  // units under prefixes differing only in the last position.
  prof.delta.assign(K * M * M, 0.0);
  prof.d_per_k.assign(K, 0.0);
  struct PrefixStats {
    double mass = 0.0;
    bool feasible = false;
    std::vector<double> hit;  // P(prefix, B_kj = 1) for every unit j
  };
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<std::uint32_t> pattern(agg.groups.size(), 0);
    for (std::size_t g = 0; g < agg.groups.size(); ++g)
      for (std::size_t i = 0; i < M; ++i)
        if (static_cast<std::size_t>(agg.groups[g].category[i]) == k) pattern[g] |= 1u << i;

    for (std::size_t len = 1; len < M; ++len) {
      const std::uint32_t mask = (1u << len) - 1;
      std::unordered_map<std::uint32_t, PrefixStats> prefixes;
      for (std::size_t g = 0; g < agg.groups.size(); ++g) {
        auto& ps = prefixes[pattern[g] & mask];
        if (ps.hit.empty()) ps.hit.assign(M, 0.0);
        ps.mass += agg.groups[g].prob;
        ps.feasible |= agg.groups[g].in_support;
        for (std::size_t j = len; j < M; ++j)
          if ((pattern[g] >> j) & 1u) ps.hit[j] += agg.groups[g].prob;
      }
      const std::uint32_t last = 1u << (len - 1);
      const std::size_t i = len - 1;
      for (const auto& [prefix, zero] : prefixes) {
        if (prefix & last) continue;
        auto it = prefixes.find(prefix | last);
        if (it == prefixes.end()) continue;
        const PrefixStats& one = it->second;
        if (!(zero.mass > 0.0 && one.mass > 0.0 && zero.feasible && one.feasible)) continue;
        for (std::size_t j = len; j < M; ++j) {
          // TV distance of two Bernoulli laws is the gap in success probability.
          const double tv = std::fabs(zero.hit[j] / zero.mass - one.hit[j] / one.mass);
          double& slot = prof.delta[(k * M + i) * M + j];
          slot = std::max(slot, std::min(tv, 1.0));
        }
      }
    }
    double dk = 0.0;
    for (std::size_t i = 0; i < M; ++i) {
      double row = 1.0;
      for (std::size_t j = i + 1; j < M; ++j) row += prof.delta[(k * M + i) * M + j];
      dk += row * row;
    }
    prof.d_per_k[k] = dk / units;
  }
  prof.d_n = *std::max_element(prof.d_per_k.begin(), prof.d_per_k.end());
  return prof;
}

LemmaReport verify_lemma1(const ExactDistribution& dist, const Statistic& stat,
                          const std::vector<double>& t_grid) {
  LemmaReport report;
  report.profile = compute_dependence_profile(dist, stat);
  const Aggregate agg = aggregate(dist, stat, std::nullopt);
  const auto theta = theta_star_of(agg);
  const DependenceProfile& prof = report.profile;
  const double m = prof.basis_count;
  const double log_bins = std::log(static_cast<double>(prof.bins));
  const double cov_term = 1.0 + prof.min_signed();
  report.negative_conc2 = cov_term < 0.0;
  for (double t : t_grid) {
    require(t > 0.0, "t-grid entries must be positive");
    LemmaRow row;
    row.t = t;
    row.exact_tail = tail_of(agg, theta, t);
    row.bound_conc1 = 2.0 * std::exp(-2.0 * m * t * t / prof.d_n + log_bins);
    row.bound_conc2 = cov_term / (m * t * t);
    row.ok1 = row.exact_tail <= row.bound_conc1 + kVerifySlack;
    row.ok2 = row.exact_tail <= row.bound_conc2 + kVerifySlack;
    report.violations += !row.ok1 + !row.ok2;
    report.rows.push_back(row);
  }
  return report;
}

std::string profile_csv(const DependenceProfile& p) {
  std::ostringstream out;
  out << "quantity,k,value\n";
  out << "M,," << p.basis_count << "\n";
  out << "p,," << p.bins - 1 << "\n";
  out << "C_N,," << fmt(p.c_n) << "\n";
  out << "Delta_N,," << (p.delta_n ? fmt(*p.delta_n) : std::string("NA")) << "\n";
  out << "prop1_bound,," << fmt(p.prop1_bound) << "\n";
  for (std::size_t k = 0; k < p.d_per_k.size(); ++k)
    out << "D_N_k," << k << ',' << fmt(p.d_per_k[k]) << "\n";
  out << "D_N,," << fmt(p.d_n) << "\n";
  return out.str();
}

std::string lemma_csv(const LemmaReport& report) {
  std::ostringstream out;
  out << "t,exact_tail,bound_conc1,bound_conc2,ok1,ok2\n";
  for (const auto& r : report.rows) {
    out << fmt(r.t) << ',' << fmt(r.exact_tail) << ',' << fmt(r.bound_conc1) << ','
        << fmt(r.bound_conc2) << ',' << (r.ok1 ? 1 : 0) << ',' << (r.ok2 ? 1 : 0) << "\n";
  }
  return out.str();
}

}  // namespace depnet

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

#include "depnet/statistics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "depnet/error.hpp"

namespace depnet {

namespace {

constexpr std::array<std::pair<StatisticKind, std::string_view>, 6> kNames{{
    {StatisticKind::kDegree, "degree"},
    {StatisticKind::kOutDegree, "out_degree"},
    {StatisticKind::kInDegree, "in_degree"},
    {StatisticKind::kEsp, "esp"},
    {StatisticKind::kGeodesic, "geodesic"},
    {StatisticKind::kWithinBlockOutDegree, "within_block_out_degree"},
}};

void need_undirected(const Graph& g, StatisticKind kind) {
  if (g.directed())
    fail(ErrorCode::kKindMismatch,
         std::string(kind_name(kind)) + " requires an undirected graph");
}

void need_directed(const Graph& g, StatisticKind kind) {
  if (!g.directed())
    fail(ErrorCode::kKindMismatch,
         std::string(kind_name(kind)) + " requires a directed graph");
}

int count_common(std::span<const int> a, std::span<const int> b) {
  int c = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++c;
      ++i;
      ++j;
    }
  }
  return c;
}

int shared_partners(const Graph& g, int i, int j) {
  if (g.dense()) {
    std::uint64_t both = g.row_mask(i) & g.row_mask(j);
    return std::popcount(both);
  }
  return count_common(g.out_neighbors(i), g.out_neighbors(j));
}

// Hop distances from `source`; -1 when unreachable.
std::vector<int> bfs(const Graph& g, int source) {
  const int n = g.n();
  std::vector<int> dist(n, -1);
  dist[source] = 0;
  if (g.dense()) {
    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::uint64_t seen = std::uint64_t{1} << source;
    std::uint64_t frontier = seen;
    for (int d = 1; frontier != 0 && seen != all; ++d) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1)
        next |= g.row_mask(std::countr_zero(f));
      next &= ~seen;
      for (std::uint64_t f = next; f != 0; f &= f - 1) dist[std::countr_zero(f)] = d;
      seen |= next;
      frontier = next;
    }
    return dist;
  }
  std::vector<int> queue{source};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int v : g.out_neighbors(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

const std::vector<int>& respondents_or_all(const Statistic& stat, int n,
                                           std::vector<int>& storage) {
  if (stat.respondents) return *stat.respondents;
  storage.resize(n);
  for (int v = 0; v < n; ++v) storage[v] = v;
  return storage;
}

}  // namespace

std::string_view kind_name(StatisticKind kind) {
  for (auto& [k, name] : kNames)
    if (k == kind) return name;
  return "unknown";
}

StatisticKind parse_kind(std::string_view name) {
  for (auto& [k, n] : kNames)
    if (n == name) return k;
  fail(ErrorCode::kInvalidArgument, "unknown statistic kind '" + std::string(name) + "'");
}

Statistic Statistic::within_block(BlockStructure blocks,
                                  std::optional<std::vector<int>> respondents) {
  Statistic s(StatisticKind::kWithinBlockOutDegree);
  s.blocks = std::make_shared<const BlockStructure>(std::move(blocks));
  s.respondents = std::move(respondents);
  return s;
}

int bin_count(const Statistic& stat, int n) {
  switch (stat.kind) {
    case StatisticKind::kDegree:
    case StatisticKind::kOutDegree:
    case StatisticKind::kInDegree:
      return n;
    case StatisticKind::kEsp:
      return std::max(n - 1, 1);
    case StatisticKind::kGeodesic:
      return n;
    case StatisticKind::kWithinBlockOutDegree:
      require(stat.blocks != nullptr, "within-block out-degree needs a block structure");
      return stat.blocks->largest_block();
  }
  return 0;
}

UnitEvents unit_events(const Graph& g, const Statistic& stat) {
  const int n = g.n();
  UnitEvents ev;
  ev.bins = bin_count(stat, n);
  switch (stat.kind) {
    case StatisticKind::kDegree:
      need_undirected(g, stat.kind);
      ev.category.resize(n);
      for (int i = 0; i < n; ++i) ev.category[i] = g.out_degree(i);
      break;
    case StatisticKind::kOutDegree:
      need_directed(g, stat.kind);
      ev.category.resize(n);
      for (int i = 0; i < n; ++i) ev.category[i] = g.out_degree(i);
      break;
    case StatisticKind::kInDegree:
      need_directed(g, stat.kind);
      ev.category.resize(n);
      for (int i = 0; i < n; ++i) ev.category[i] = g.in_degree(i);
      break;
    case StatisticKind::kEsp:
      need_undirected(g, stat.kind);
      ev.category.reserve(g.edge_count());
      for (auto [i, j] : g.edges()) ev.category.push_back(shared_partners(g, i, j));
      break;
    case StatisticKind::kGeodesic: {
      need_undirected(g, stat.kind);
      ev.category.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
      for (int i = 0; i < n; ++i) {
        auto dist = bfs(g, i);
        for (int j = i + 1; j < n; ++j)
          ev.category.push_back(dist[j] < 0 ? n - 1 : dist[j] - 1);
      }
      break;
    }
    case StatisticKind::kWithinBlockOutDegree: {
      need_directed(g, stat.kind);
      const BlockStructure& blocks = *stat.blocks;
      require(blocks.node_count() == n, "block structure does not cover the graph");
      std::vector<int> all;
      const auto& resp = respondents_or_all(stat, n, all);
      ev.category.reserve(resp.size());
      for (int i : resp) {
        require(i >= 0 && i < n, "respondent outside the node range");
        int b = blocks.block_of(i);
        int d = 0;
        for (int j : g.out_neighbors(i)) d += blocks.block_of(j) == b;
        ev.category.push_back(d);
      }
      break;
    }
  }
  return ev;
}

EmpiricalDistribution to_distribution(const UnitEvents& events, StatisticKind kind) {
  const std::size_t m = events.basis_count();
  if (m == 0)
    fail(ErrorCode::kUndefined,
         std::string(kind_name(kind)) + " distribution undefined: basis count is zero");
  EmpiricalDistribution dist;
  dist.kind = kind;
  dist.basis_count = m;
  std::vector<std::size_t> counts(events.bins, 0);
  for (int c : events.category) ++counts[c];
  dist.values.resize(events.bins);
  for (int k = 0; k < events.bins; ++k)
    dist.values[k] = static_cast<double>(counts[k]) / static_cast<double>(m);
  return dist;
}

EmpiricalDistribution compute_distribution(const Graph& g, const Statistic& stat) {
  if (stat.kind == StatisticKind::kGeodesic && g.n() < 2)
    fail(ErrorCode::kUndefined, "geodesic distribution needs at least two nodes");
  if (stat.kind == StatisticKind::kWithinBlockOutDegree && stat.respondents &&
      stat.respondents->empty())
    fail(ErrorCode::kInvalidArgument, "respondent set is empty");
  return to_distribution(unit_events(g, stat), stat.kind);
}

EmpiricalDistribution degree_distribution(const Graph& g) {
  return compute_distribution(g, StatisticKind::kDegree);
}

EmpiricalDistribution out_degree_distribution(const Graph& g) {
  return compute_distribution(g, StatisticKind::kOutDegree);
}

EmpiricalDistribution in_degree_distribution(const Graph& g) {
  return compute_distribution(g, StatisticKind::kInDegree);
}

EmpiricalDistribution esp_distribution(const Graph& g) {
  return compute_distribution(g, StatisticKind::kEsp);
}

EmpiricalDistribution geodesic_distribution(const Graph& g) {
  return compute_distribution(g, StatisticKind::kGeodesic);
}

EmpiricalDistribution within_block_outdegree_distribution(
    const Graph& g, const BlockStructure& blocks, const std::vector<int>& respondents) {
  return compute_distribution(g, Statistic::within_block(blocks, respondents));
}

double linf_error(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size())
    fail(ErrorCode::kInvalidArgument, "bin count mismatch: " + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size()));
  double worst = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::fabs(a[k] - b[k]));
  return worst;
}

double linf_error(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
  if (a.kind != b.kind) fail(ErrorCode::kKindMismatch, "distributions of different kinds");
  return linf_error(a.values, b.values);
}

std::vector<int> shared_partner_matrix(const Graph& g) {
  const int n = g.n();
  std::vector<int> sp(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      sp[i * n + j] = sp[j * n + i] = shared_partners(g, i, j);
  return sp;
}

std::string distribution_csv(const EmpiricalDistribution& dist) {
  std::ostringstream out;
  out << "kind,M,k,value\n";
  const bool geodesic = dist.kind == StatisticKind::kGeodesic;
  char buf[64];
  for (std::size_t k = 0; k < dist.values.size(); ++k) {
    out << kind_name(dist.kind) << ',' << dist.basis_count << ',';
    if (geodesic && k + 1 == dist.values.size()) {
      out << "inf";
    } else {
      out << (geodesic ? k + 1 : k);
    }
    std::snprintf(buf, sizeof buf, "%.17g", dist.values[k]);
    out << ',' << buf << "\n";
  }
  return out.str();
}

}  // namespace depnet

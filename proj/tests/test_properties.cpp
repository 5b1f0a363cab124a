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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "depnet/error.hpp"
#include "depnet/oracle.hpp"
#include "depnet/statistics.hpp"
#include "test_util.hpp"

using namespace depnet;
namespace dt = depnet::testing;

namespace {

constexpr int kCases = 1000;

Graph random_case(Rng& rng, bool directed, int max_n = 30) {
  const int n = 2 + static_cast<int>(rng.below(max_n - 1));
  return dt::random_graph(n, directed, rng.uniform(), rng);
}

std::vector<int> random_permutation(int n, Rng& rng) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.below(i + 1)]);
  return p;
}

int triangles(const Graph& g) {
  auto a = dt::adjacency(g);
  int t = 0;
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j)
      for (int k = j + 1; k < g.n(); ++k) t += a[i][j] & a[j][k] & a[i][k];
  return t;
}

}  // namespace

TEST_SUITE("properties") {
  TEST_CASE("distributions sum to one") {
    Rng rng(101);
    for (int c = 0; c < kCases; ++c) {
      Graph g = random_case(rng, false);
      CHECK(std::fabs(dt::sum(degree_distribution(g).values) - 1) < 1e-12);
      CHECK(std::fabs(dt::sum(geodesic_distribution(g).values) - 1) < 1e-12);
      if (g.edge_count() > 0) CHECK(std::fabs(dt::sum(esp_distribution(g).values) - 1) < 1e-12);
      Graph d = random_case(rng, true);
      CHECK(std::fabs(dt::sum(out_degree_distribution(d).values) - 1) < 1e-12);
      CHECK(std::fabs(dt::sum(in_degree_distribution(d).values) - 1) < 1e-12);
    }
  }

  TEST_CASE("counting identities") {
    Rng rng(202);
    for (int c = 0; c < kCases; ++c) {
      Graph g = random_case(rng, false, 20);
      const int n = g.n();
      const auto deg = degree_distribution(g).values;
      double degree_total = 0;
      for (std::size_t k = 0; k < deg.size(); ++k) degree_total += k * deg[k] * n;
      CHECK(std::lround(degree_total) == 2 * g.edge_count());

      const auto geo = geodesic_distribution(g).values;
      CHECK(std::lround(geo[0] * n * (n - 1) / 2) == g.edge_count());

      if (g.edge_count() > 0) {
        const auto esp = esp_distribution(g).values;
        double partners = 0;
        for (std::size_t k = 0; k < esp.size(); ++k) partners += k * esp[k] * g.edge_count();
        CHECK(std::lround(partners) == 3 * triangles(g));
      }
    }
  }

  TEST_CASE("brute-force agreement") {
    Rng rng(303);
    for (int c = 0; c < kCases; ++c) {
      Graph g = random_case(rng, false, 16);
      CHECK(dt::max_abs_diff(degree_distribution(g).values, dt::brute_degree(g)) < 1e-12);
      CHECK(dt::max_abs_diff(geodesic_distribution(g).values, dt::brute_geodesic(g)) < 1e-12);
      if (g.edge_count() > 0)
        CHECK(dt::max_abs_diff(esp_distribution(g).values, dt::brute_esp(g)) < 1e-12);
    }
  }

  TEST_CASE("permutation invariance") {
    Rng rng(404);
    for (int c = 0; c < kCases; ++c) {
      Graph g = random_case(rng, false);
      Graph h = g.permuted(random_permutation(g.n(), rng));
      CHECK(h.edge_count() == g.edge_count());
      CHECK(degree_distribution(g).values == degree_distribution(h).values);
      CHECK(geodesic_distribution(g).values == geodesic_distribution(h).values);
      if (g.edge_count() > 0) CHECK(esp_distribution(g).values == esp_distribution(h).values);
      Graph d = random_case(rng, true);
      Graph e = d.permuted(random_permutation(d.n(), rng));
      CHECK(out_degree_distribution(d).values == out_degree_distribution(e).values);
      CHECK(in_degree_distribution(d).values == in_degree_distribution(e).values);
    }
  }

  TEST_CASE("edge-list round trip") {
    Rng rng(505);
    for (int c = 0; c < kCases; ++c) {
      const bool directed = rng.bernoulli(0.5);
      Graph g = random_case(rng, directed, 40);
      std::optional<BlockStructure> blocks;
      if (rng.bernoulli(0.5)) {
        const int count = 1 + static_cast<int>(rng.below(std::min(g.n(), 5)));
        std::vector<int> a(g.n());
        for (int i = 0; i < g.n(); ++i) a[i] = i < count ? i : static_cast<int>(rng.below(count));
        blocks = BlockStructure(std::move(a));
      }
      Network back = parse_edge_list(serialize_edge_list(g, blocks ? &*blocks : nullptr));
      CHECK(back.graph == g);
      CHECK(back.blocks.has_value() == blocks.has_value());
      if (blocks) CHECK(*back.blocks == *blocks);

      std::vector<int> nodes;
      for (int i = 0; i < g.n(); ++i)
        if (rng.bernoulli(0.4)) nodes.push_back(i);
      CHECK(parse_node_list(serialize_node_list(nodes), g.n()) == nodes);
    }
  }

  TEST_CASE("exact laws are normalised") {
    Rng rng(606);
    for (int c = 0; c < kCases; ++c) {
      const int n = 2 + static_cast<int>(rng.below(3));
      ModelSpec spec;
      switch (rng.below(3)) {
        case 0: spec = homogeneous_bernoulli(n, rng.uniform(), rng.bernoulli(0.5)); break;
        case 1: {
          std::vector<double> theta(n);
          for (double& t : theta) t = 4 * rng.uniform() - 2;
          spec = beta_model(theta);
          break;
        }
        default:
          spec = curved_ergm(n, {4 * rng.uniform() - 2, 2 * rng.uniform() - 1, rng.uniform(),
                                 rng.bernoulli(0.5) ? EtaConvention::kAsPrinted
                                                    : EtaConvention::kStandard,
                                 std::nullopt});
      }
      auto dist = exact_distribution(spec);
      double total = 0;
      for (double p : dist.probs) {
        CHECK(p >= 0.0);
        total += p;
      }
      CHECK(std::fabs(total - 1) < 1e-12);
      if (!spec.directed) {
        auto theta = exact_theta_star(dist, StatisticKind::kDegree);
        CHECK(std::fabs(dt::sum(theta) - 1) < 1e-12);
      }
    }
  }

  TEST_CASE("sampling is deterministic under parallelism") {
    Rng rng(707);
    for (int c = 0; c < kCases; ++c) {
      const std::uint64_t seed = rng();
      const int n = 3 + static_cast<int>(rng.below(6));
      ModelSpec spec = rng.bernoulli(0.5)
                           ? homogeneous_bernoulli(n, rng.uniform(), false)
                           : curved_ergm(n, {-1, 0.3, 0.5, EtaConvention::kAsPrinted,
                                             McmcSchedule{20, 5}});
      auto a = sample_many(spec, 6, seed, 1, 2);
      auto b = sample_many(spec, 6, seed, 3, 2);
      CHECK(a == b);
    }
  }
}

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

#include <cmath>

#include "depnet/error.hpp"
#include "depnet/statistics.hpp"
#include "test_util.hpp"

using namespace depnet;
using depnet::testing::make_graph;

namespace {

Graph triangle() { return make_graph(3, false, {{0, 1}, {1, 2}, {0, 2}}); }
Graph path3() { return make_graph(3, false, {{0, 1}, {1, 2}}); }

void check_values(const EmpiricalDistribution& d, std::vector<double> want) {
  REQUIRE(d.size() == want.size());
  for (std::size_t k = 0; k < want.size(); ++k) CHECK(d[k] == doctest::Approx(want[k]).epsilon(1e-15));
}

}  // namespace

TEST_SUITE("statistics") {
  TEST_CASE("degree distribution") {
    check_values(degree_distribution(triangle()), {0, 0, 1});
    check_values(degree_distribution(Graph::empty(3, false)), {1, 0, 0});
    check_values(degree_distribution(path3()), {0, 2.0 / 3, 1.0 / 3});
    CHECK(degree_distribution(path3()).basis_count == 3);
    try {
      degree_distribution(Graph::empty(3, true));
      FAIL("expected kind mismatch");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kKindMismatch);
    }
  }

  TEST_CASE("out- and in-degree distributions") {
    Graph cycle = make_graph(3, true, {{0, 1}, {1, 2}, {2, 0}});
    check_values(out_degree_distribution(cycle), {0, 1, 0});
    check_values(out_degree_distribution(Graph::empty(3, true)), {1, 0, 0});
    Graph star = make_graph(3, true, {{0, 1}, {0, 2}});
    check_values(out_degree_distribution(star), {2.0 / 3, 0, 1.0 / 3});
    check_values(in_degree_distribution(star), {1.0 / 3, 2.0 / 3, 0});
    CHECK_THROWS_AS(out_degree_distribution(triangle()), Error);
  }

  TEST_CASE("esp distribution") {
    check_values(esp_distribution(triangle()), {0, 1});
    check_values(esp_distribution(path3()), {1, 0});
    Graph c4 = make_graph(4, false, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    check_values(esp_distribution(c4), {1, 0, 0});
    CHECK(esp_distribution(c4).basis_count == 4);
    try {
      esp_distribution(Graph::empty(3, false));
      FAIL("expected undefined");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kUndefined);
    }
  }

  TEST_CASE("geodesic distribution") {
    check_values(geodesic_distribution(triangle()), {1, 0, 0});
    check_values(geodesic_distribution(path3()), {2.0 / 3, 1.0 / 3, 0});
    check_values(geodesic_distribution(Graph::empty(3, false)), {0, 0, 1});
    CHECK(geodesic_distribution(path3()).basis_count == 3);
    CHECK_THROWS_AS(geodesic_distribution(Graph::empty(1, false)), Error);
  }

  TEST_CASE("geodesic on a large sparse graph matches Floyd-Warshall") {
    Rng rng(7);
    Graph g = depnet::testing::random_graph(90, false, 0.03, rng);
    CHECK_FALSE(g.dense());
    CHECK(depnet::testing::max_abs_diff(geodesic_distribution(g).values,
                                        depnet::testing::brute_geodesic(g)) < 1e-12);
  }

  TEST_CASE("within-block out-degree") {
    Graph g = make_graph(4, true, {{0, 1}, {0, 2}, {2, 3}});
    BlockStructure blocks({0, 0, 1, 1});
    check_values(within_block_outdegree_distribution(g, blocks, {0, 1, 2, 3}), {0.5, 0.5});
    check_values(within_block_outdegree_distribution(g, blocks, {0, 2}), {0, 1});
    CHECK_THROWS_AS(within_block_outdegree_distribution(g, blocks, {}), Error);
    CHECK_THROWS_AS(within_block_outdegree_distribution(path3(), BlockStructure({0, 0, 1}), {0}),
                    Error);
    auto stat = Statistic::within_block(blocks);
    check_values(compute_distribution(g, stat), {0.5, 0.5});
  }

  TEST_CASE("within-block bins follow the largest block") {
    Graph g = make_graph(5, true, {{0, 1}, {2, 3}, {2, 4}});
    BlockStructure blocks({0, 0, 1, 1, 1});
    auto d = within_block_outdegree_distribution(g, blocks, {0, 1});
    check_values(d, {0.5, 0.5, 0});
  }

  TEST_CASE("linf error") {
    CHECK(linf_error(std::vector<double>{0.2, 0.8}, std::vector<double>{0.2, 0.8}) == 0.0);
    CHECK(linf_error(std::vector<double>{1, 0, 0}, std::vector<double>{0, 1, 0}) == 1.0);
    CHECK(linf_error(std::vector<double>{0.5, 0.5, 0}, std::vector<double>{0.25, 0.5, 0.25}) ==
          doctest::Approx(0.25));
    CHECK_THROWS_AS(linf_error(std::vector<double>{1}, std::vector<double>{0.5, 0.5}), Error);
  }

  TEST_CASE("kind names round trip") {
    for (auto k : {StatisticKind::kDegree, StatisticKind::kOutDegree, StatisticKind::kInDegree,
                   StatisticKind::kEsp, StatisticKind::kGeodesic,
                   StatisticKind::kWithinBlockOutDegree})
      CHECK(parse_kind(kind_name(k)) == k);
    CHECK_THROWS_AS(parse_kind("triangles"), Error);
  }

  TEST_CASE("csv output") {
    const std::string csv = distribution_csv(geodesic_distribution(path3()));
    CHECK(csv.rfind("kind,M,k,value\n", 0) == 0);
    CHECK(csv.find("geodesic,3,1,") != std::string::npos);
    CHECK(csv.find("geodesic,3,inf,0") != std::string::npos);
  }

  TEST_CASE("shared partner matrix") {
    auto sp = shared_partner_matrix(triangle());
    CHECK(sp[0 * 3 + 1] == 1);
    CHECK(sp[0 * 3 + 0] == 0);
  }
}

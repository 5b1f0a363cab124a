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

#include "depnet/error.hpp"
#include "depnet/graph.hpp"
#include "test_util.hpp"

using namespace depnet;
using depnet::testing::make_graph;

TEST_SUITE("graph") {
  TEST_CASE("new graph is empty") {
    Graph g = Graph::empty(3, false);
    CHECK(g.n() == 3);
    CHECK_FALSE(g.directed());
    CHECK(g.edge_count() == 0);
    Graph one = Graph::empty(1, true);
    CHECK(one.n() == 1);
    CHECK(one.edge_count() == 0);
    CHECK_THROWS_AS(Graph::empty(0, false), Error);
  }

  TEST_CASE("set_edge mirrors undirected edges and is idempotent") {
    GraphBuilder b(3, false);
    b.set_edge(0, 1);
    Graph g = b.build();
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    b.set_edge(0, 1);
    CHECK(b.build().edge_count() == 1);
    b.set_edge(1, 0, false);
    CHECK(b.build().edge_count() == 0);
  }

  TEST_CASE("set_edge rejects self-loops and out-of-range nodes") {
    GraphBuilder b(3, false);
    CHECK_THROWS_AS(b.set_edge(0, 0), Error);
    CHECK_THROWS_AS(b.set_edge(0, 3), Error);
    CHECK_THROWS_AS(b.set_edge(-1, 2), Error);
  }

  TEST_CASE("directed edges are not mirrored") {
    Graph g = make_graph(3, true, {{0, 1}, {1, 2}});
    CHECK(g.has_edge(0, 1));
    CHECK_FALSE(g.has_edge(1, 0));
    CHECK(g.out_degree(0) == 1);
    CHECK(g.in_degree(0) == 0);
    CHECK(g.in_degree(2) == 1);
  }

  TEST_CASE("with_edge returns a modified copy") {
    Graph g = Graph::empty(4, false);
    Graph h = g.with_edge(2, 3, true);
    CHECK(g.edge_count() == 0);
    CHECK(h.has_edge(3, 2));
    CHECK(h.with_edge(3, 2, false) == g);
  }

  TEST_CASE("edges come out in canonical order") {
    Graph g = make_graph(4, false, {{3, 1}, {0, 2}, {1, 0}});
    std::vector<Edge> want{{0, 1}, {0, 2}, {1, 3}};
    CHECK(g.edges() == want);
  }

  TEST_CASE("sparse representation above the dense limit") {
    GraphBuilder b(100, false);
    b.set_edge(0, 99).set_edge(50, 51);
    Graph g = b.build();
    CHECK_FALSE(g.dense());
    CHECK(g.has_edge(99, 0));
    CHECK(g.edge_count() == 2);
  }

  TEST_CASE("parse path graph") {
    Network net = parse_edge_list("directed 0\nnodes 3\nedges\n1 2\n2 3\n");
    CHECK(net.graph.n() == 3);
    CHECK(net.graph.edge_count() == 2);
    CHECK(net.graph.has_edge(1, 0));
    CHECK(net.graph.has_edge(2, 1));
    CHECK_FALSE(net.blocks.has_value());
  }

  TEST_CASE("parse directed graph") {
    Network net = parse_edge_list("directed 1\nnodes 3\nedges\n1 2\n2 3\n");
    CHECK(net.graph.directed());
    CHECK(net.graph.edge_count() == 2);
    CHECK_FALSE(net.graph.has_edge(1, 0));
  }

  TEST_CASE("parse blocks and comments") {
    Network net = parse_edge_list(
        "# class network\ndirected 1\nnodes 4\nblocks\n1 1\n2 1\n3 2\n4 2\n\nedges\n1 2\n3 4\n");
    REQUIRE(net.blocks.has_value());
    CHECK(net.blocks->block_count() == 2);
    CHECK(net.blocks->block_of(2) == 1);
  }

  TEST_CASE("parse errors name the line") {
    auto line_of = [](const char* text) {
      try {
        parse_edge_list(text);
      } catch (const ParseError& e) {
        return e.line();
      }
      return -1;
    };
    CHECK(line_of("directed 0\nnodes 3\nedges\n1 1\n") == 4);
    CHECK(line_of("directed 0\nnodes 3\nedges\n1 2\n2 1\n") == 5);
    CHECK(line_of("directed 0\nnodes 3\nedges\n1 4\n") == 4);
    CHECK(line_of("directed 2\nnodes 3\n") == 1);
    CHECK(line_of("nodes 3\ndirected 0\n") == 1);
    CHECK(line_of("directed 0\nnodes 3\nedges\n1 2 3\n") == 4);
  }

  TEST_CASE("block structure validation") {
    CHECK_THROWS_AS(BlockStructure({0, 2}), Error);
    CHECK_THROWS_AS(BlockStructure({1, 1}), Error);
    BlockStructure b({0, 1, 0, 1, 1});
    CHECK(b.largest_block() == 3);
    CHECK(b.members(0) == std::vector<int>{0, 2});
  }

  TEST_CASE("round trip with blocks") {
    Graph g = make_graph(5, true, {{0, 1}, {4, 3}, {2, 0}});
    BlockStructure blocks({0, 0, 1, 1, 1});
    Network back = parse_edge_list(serialize_edge_list(g, &blocks));
    CHECK(back.graph == g);
    REQUIRE(back.blocks.has_value());
    CHECK(*back.blocks == blocks);
  }

  TEST_CASE("node lists") {
    CHECK(parse_node_list("# r\n3\n1\n", 4) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(parse_node_list("1\n1\n", 4), Error);
    CHECK_THROWS_AS(parse_node_list("5\n", 4), Error);
    std::vector<int> nodes{0, 3};
    CHECK(parse_node_list(serialize_node_list(nodes), 4) == nodes);
  }

  TEST_CASE("permutation relabels nodes") {
    Graph g = make_graph(3, true, {{0, 1}});
    std::vector<int> perm{2, 0, 1};
    Graph h = g.permuted(perm);
    CHECK(h.has_edge(2, 0));
    CHECK(h.edge_count() == 1);
  }
}

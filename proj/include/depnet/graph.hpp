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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace depnet {

using Edge = std::pair<int, int>;

class GraphBuilder;

// Simple graph on nodes 0..n-1 without self-loops. Undirected graphs store
// each edge in both adjacency rows. Immutable once built; use GraphBuilder or
// with_edge() to derive modified copies.
//
// Graphs with at most 64 nodes also carry one adjacency bitmask per node,
// which the enumeration and statistic code use for constant-time lookups.
class Graph {
 public:
  static constexpr int kDenseLimit = 64;

  Graph() = default;

  // Throws on n < 1.
  static Graph empty(int n, bool directed);

  int n() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }
  bool dense() const noexcept { return !masks_.empty(); }

  // Number of edges; unordered pairs for undirected graphs.
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool has_edge(int i, int j) const;

  // Sorted successor list (neighbour list when undirected).
  std::span<const int> out_neighbors(int i) const { return out_[i]; }
  // Sorted predecessor list (neighbour list when undirected).
  std::span<const int> in_neighbors(int i) const {
    return directed_ ? std::span<const int>(in_[i]) : out_neighbors(i);
  }
  int out_degree(int i) const { return static_cast<int>(out_[i].size()); }
  int in_degree(int i) const { return static_cast<int>(in_neighbors(i).size()); }

  // Adjacency row as a bitmask; only valid when dense().
  std::uint64_t row_mask(int i) const { return masks_[i]; }

  // Edges in canonical order: lexicographic (i, j), with i < j when
  // undirected.
  std::vector<Edge> edges() const;

  // Copy of this graph with (i, j) set or cleared. Mirrors (j, i) for
  // undirected graphs. Throws on self-loops and out-of-range nodes.
  Graph with_edge(int i, int j, bool present) const;

  // Relabels node v as perm[v].
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.directed_ == b.directed_ && a.out_ == b.out_;
  }

 private:
  friend class GraphBuilder;

  int n_ = 0;
  bool directed_ = false;
  std::size_t edge_count_ = 0;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
  std::vector<std::uint64_t> masks_;
};

class GraphBuilder {
 public:
  GraphBuilder(int n, bool directed);
  explicit GraphBuilder(const Graph& g);

  int n() const noexcept { return n_; }
  bool directed() const noexcept { return directed_; }

  // Idempotent. Throws on self-loops and out-of-range nodes.
  GraphBuilder& set_edge(int i, int j, bool present = true);
  bool has_edge(int i, int j) const;

  Graph build() const;

 private:
  void check(int i, int j) const;

  int n_;
  bool directed_;
  std::vector<std::vector<int>> out_;
};

// Partition of the nodes into blocks 0..K-1, every block non-empty.
class BlockStructure {
 public:
  BlockStructure() = default;
  // Throws unless the ids form the contiguous range 0..K-1 with every block
  // non-empty.
  explicit BlockStructure(std::vector<int> assignment);

  int node_count() const noexcept { return static_cast<int>(assignment_.size()); }
  int block_count() const noexcept { return static_cast<int>(members_.size()); }
  int block_of(int node) const { return assignment_[node]; }
  const std::vector<int>& members(int block) const { return members_[block]; }
  const std::vector<int>& assignment() const noexcept { return assignment_; }
  int largest_block() const;

  friend bool operator==(const BlockStructure& a, const BlockStructure& b) {
    return a.assignment_ == b.assignment_;
  }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> members_;
};

struct Network {
  Graph graph;
  std::optional<BlockStructure> blocks;
};

// Plain-text edge-list format, 1-based node labels:
//
//   directed <0|1>
//   nodes <N>
//   blocks            (optional, followed by N lines "<node> <block>")
//   edges
//   <i> <j>           (one per line)
//
// Lines starting with '#' and blank lines are ignored. Errors carry the
// 1-based line number.
Network parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g,
                                const BlockStructure* blocks = nullptr);

// One 1-based node label per line; '#' comments allowed.
std::vector<int> parse_node_list(std::string_view text, int n);
std::string serialize_node_list(std::span<const int> nodes);

}  // namespace depnet

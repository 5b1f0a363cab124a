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

#include "depnet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "depnet/error.hpp"

namespace depnet {

Graph Graph::empty(int n, bool directed) {
  return GraphBuilder(n, directed).build();
}

bool Graph::has_edge(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j) return false;
  if (dense()) return (masks_[i] >> j) & 1u;
  return std::binary_search(out_[i].begin(), out_[i].end(), j);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (int i = 0; i < n_; ++i) {
    for (int j : out_[i]) {
      if (directed_ || i < j) result.emplace_back(i, j);
    }
  }
  return result;
}

Graph Graph::with_edge(int i, int j, bool present) const {
  GraphBuilder b(*this);
  b.set_edge(i, j, present);
  return b.build();
}

Graph Graph::permuted(std::span<const int> perm) const {
  require(static_cast<int>(perm.size()) == n_, "permutation size mismatch");
  GraphBuilder b(n_, directed_);
  for (auto [i, j] : edges()) b.set_edge(perm[i], perm[j]);
  return b.build();
}

GraphBuilder::GraphBuilder(int n, bool directed)
    : n_(n), directed_(directed) {
  require(n >= 1, "graph needs at least one node");
  out_.resize(n);
}

GraphBuilder::GraphBuilder(const Graph& g)
    : n_(g.n()), directed_(g.directed()), out_(g.out_) {}

void GraphBuilder::check(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) {
    fail(ErrorCode::kInvalidArgument,
         "node out of range: (" + std::to_string(i + 1) + ", " +
             std::to_string(j + 1) + ") with n = " + std::to_string(n_));
  }
  if (i == j) {
    fail(ErrorCode::kInvalidArgument,
         "self-loop at node " + std::to_string(i + 1));
  }
}

bool GraphBuilder::has_edge(int i, int j) const {
  check(i, j);
  const auto& row = out_[i];
  return std::find(row.begin(), row.end(), j) != row.end();
}

GraphBuilder& GraphBuilder::set_edge(int i, int j, bool present) {
  check(i, j);
  auto apply = [present](std::vector<int>& row, int v) {
    auto it = std::find(row.begin(), row.end(), v);
    if (present && it == row.end()) row.push_back(v);
    if (!present && it != row.end()) row.erase(it);
  };
  apply(out_[i], j);
  if (!directed_) apply(out_[j], i);
  return *this;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.n_ = n_;
  g.directed_ = directed_;
  g.out_ = out_;
  std::size_t total = 0;
  for (auto& row : g.out_) {
    std::sort(row.begin(), row.end());
    total += row.size();
  }
  g.edge_count_ = directed_ ? total : total / 2;
  if (directed_) {
    g.in_.resize(n_);
    for (int i = 0; i < n_; ++i)
      for (int j : g.out_[i]) g.in_[j].push_back(i);
  }
  if (n_ <= Graph::kDenseLimit) {
    g.masks_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j : g.out_[i]) g.masks_[i] |= std::uint64_t{1} << j;
  }
  return g;
}

BlockStructure::BlockStructure(std::vector<int> assignment)
    : assignment_(std::move(assignment)) {
  require(!assignment_.empty(), "block structure needs at least one node");
  int k = 0;
  for (int b : assignment_) {
    require(b >= 0, "negative block id");
    k = std::max(k, b + 1);
  }
  members_.resize(k);
  for (int v = 0; v < static_cast<int>(assignment_.size()); ++v)
    members_[assignment_[v]].push_back(v);
  for (int b = 0; b < k; ++b) {
    require(!members_[b].empty(),
            "block " + std::to_string(b + 1) + " is empty; ids must be contiguous");
  }
}

int BlockStructure::largest_block() const {
  std::size_t best = 0;
  for (const auto& m : members_) best = std::max(best, m.size());
  return static_cast<int>(best);
}

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back(raw.substr(start, i - start));
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

long long to_int(const Line& line, std::string_view tok) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(line.number, "expected an integer, got '" + std::string(tok) + "'");
  return v;
}

int node_label(const Line& line, std::string_view tok, int n) {
  long long v = to_int(line, tok);
  if (v < 1 || v > n)
    throw ParseError(line.number, "node " + std::to_string(v) +
                                      " outside 1.." + std::to_string(n));
  return static_cast<int>(v - 1);
}

}  // namespace

Network parse_edge_list(std::string_view text) {
  auto lines = tokenize(text);
  std::size_t cur = 0;
  auto expect_header = [&](std::string_view key) -> long long {
    if (cur >= lines.size())
      throw ParseError(lines.empty() ? 1 : lines.back().number + 1,
                       "missing '" + std::string(key) + "' header");
    const Line& line = lines[cur++];
    if (line.tokens.size() != 2 || line.tokens[0] != key)
      throw ParseError(line.number, "expected '" + std::string(key) + " <value>'");
    return to_int(line, line.tokens[1]);
  };

  long long directed = expect_header("directed");
  if (directed != 0 && directed != 1)
    throw ParseError(lines[cur - 1].number, "directed must be 0 or 1");
  long long n = expect_header("nodes");
  if (n < 1 || n > (1 << 26))
    throw ParseError(lines[cur - 1].number, "invalid node count");

  Network net;
  if (cur < lines.size() && lines[cur].tokens[0] == "blocks") {
    if (lines[cur].tokens.size() != 1)
      throw ParseError(lines[cur].number, "'blocks' takes no arguments");
    ++cur;
    std::vector<int> assignment(n, -1);
    for (long long seen = 0; seen < n; ++seen) {
      if (cur >= lines.size() || lines[cur].tokens[0] == "edges")
        throw ParseError(cur < lines.size() ? lines[cur].number : lines.back().number + 1,
                         "expected " + std::to_string(n) + " block lines");
      const Line& line = lines[cur++];
      if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<node> <block>'");
      int v = node_label(line, line.tokens[0], static_cast<int>(n));
      long long b = to_int(line, line.tokens[1]);
      if (b < 1 || b > n) throw ParseError(line.number, "block id outside 1.." + std::to_string(n));
      if (assignment[v] != -1) throw ParseError(line.number, "duplicate block line for node " + std::to_string(v + 1));
      assignment[v] = static_cast<int>(b - 1);
    }
    try {
      net.blocks = BlockStructure(std::move(assignment));
    } catch (const Error& e) {
      throw ParseError(lines[cur - 1].number, e.what());
    }
  }

  if (cur >= lines.size())
    throw ParseError(lines.empty() ? 1 : lines.back().number + 1, "missing 'edges' header");
  if (lines[cur].tokens.size() != 1 || lines[cur].tokens[0] != "edges")
    throw ParseError(lines[cur].number, "expected 'edges'");
  ++cur;

  GraphBuilder builder(static_cast<int>(n), directed == 1);
  for (; cur < lines.size(); ++cur) {
    const Line& line = lines[cur];
    if (line.tokens.size() != 2) throw ParseError(line.number, "expected '<i> <j>'");
    int i = node_label(line, line.tokens[0], static_cast<int>(n));
    int j = node_label(line, line.tokens[1], static_cast<int>(n));
    if (i == j) throw ParseError(line.number, "self-loop at node " + std::to_string(i + 1));
    if (builder.has_edge(i, j)) throw ParseError(line.number, "duplicate edge");
    builder.set_edge(i, j);
  }
  net.graph = builder.build();
  return net;
}

std::string serialize_edge_list(const Graph& g, const BlockStructure* blocks) {
  std::ostringstream out;
  out << "directed " << (g.directed() ? 1 : 0) << "\n";
  out << "nodes " << g.n() << "\n";
  if (blocks) {
    require(blocks->node_count() == g.n(), "block structure size mismatch");
    out << "blocks\n";
    for (int v = 0; v < g.n(); ++v) out << v + 1 << ' ' << blocks->block_of(v) + 1 << "\n";
  }
  out << "edges\n";
  for (auto [i, j] : g.edges()) out << i + 1 << ' ' << j + 1 << "\n";
  return out.str();
}

std::vector<int> parse_node_list(std::string_view text, int n) {
  std::vector<int> nodes;
  std::vector<bool> seen(n, false);
  for (const Line& line : tokenize(text)) {
    for (auto tok : line.tokens) {
      int v = node_label(line, tok, n);
      if (seen[v]) throw ParseError(line.number, "duplicate node " + std::to_string(v + 1));
      seen[v] = true;
      nodes.push_back(v);
    }
  }
  std::sort(nodes.begin(), nodes.end());
  return nodes;
}

std::string serialize_node_list(std::span<const int> nodes) {
  std::ostringstream out;
  for (int v : nodes) out << v + 1 << "\n";
  return out.str();
}

}  // namespace depnet

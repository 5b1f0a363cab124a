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
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "depnet/graph.hpp"

namespace depnet {

enum class StatisticKind {
  kDegree,
  kOutDegree,
  kInDegree,
  kEsp,
  kGeodesic,
  kWithinBlockOutDegree,
};

std::string_view kind_name(StatisticKind kind);
// Accepts the names produced by kind_name(); throws otherwise.
StatisticKind parse_kind(std::string_view name);

// A statistic kind together with its parameters. Only the within-block
// out-degree uses `blocks` and `respondents`; a missing respondent set means
// every node responds.
struct Statistic {
  StatisticKind kind = StatisticKind::kDegree;
  std::shared_ptr<const BlockStructure> blocks;
  std::optional<std::vector<int>> respondents;

  Statistic() = default;
  Statistic(StatisticKind k) : kind(k) {}  // NOLINT(google-explicit-constructor)
  static Statistic within_block(BlockStructure blocks,
                                std::optional<std::vector<int>> respondents = {});
};

// The realised event of every basis unit: unit m falls in bin
// `category[m]`. Bins are mutually exclusive, so each unit has exactly one.
struct UnitEvents {
  std::vector<int> category;
  int bins = 0;

  std::size_t basis_count() const { return category.size(); }
};

// Units per kind: nodes (degree kinds), present edges in canonical order
// (ESP), unordered node pairs in canonical order (geodesic), respondents in
// increasing order (within-block out-degree). Throws kKindMismatch when the
// graph's directedness does not fit the kind.
UnitEvents unit_events(const Graph& g, const Statistic& stat);

// Number of bins the kind produces on n nodes (independent of the graph).
int bin_count(const Statistic& stat, int n);

struct EmpiricalDistribution {
  std::vector<double> values;
  std::size_t basis_count = 0;
  StatisticKind kind = StatisticKind::kDegree;

  std::size_t size() const { return values.size(); }
  double operator[](std::size_t k) const { return values[k]; }
};

// Proportions counts/M from unit events. Throws kUndefined when M == 0.
EmpiricalDistribution to_distribution(const UnitEvents& events, StatisticKind kind);

EmpiricalDistribution degree_distribution(const Graph& g);
EmpiricalDistribution out_degree_distribution(const Graph& g);
EmpiricalDistribution in_degree_distribution(const Graph& g);
EmpiricalDistribution esp_distribution(const Graph& g);
// Bins k = 1..N-1 followed by one "unreachable" bin.
EmpiricalDistribution geodesic_distribution(const Graph& g);
EmpiricalDistribution within_block_outdegree_distribution(
    const Graph& g, const BlockStructure& blocks, const std::vector<int>& respondents);

EmpiricalDistribution compute_distribution(const Graph& g, const Statistic& stat);

// max_k |a_k - b_k|.
double linf_error(const EmpiricalDistribution& a, const EmpiricalDistribution& b);
double linf_error(const std::vector<double>& a, const std::vector<double>& b);

// Shared-partner count of every node pair, row-major n x n (diagonal 0).
std::vector<int> shared_partner_matrix(const Graph& g);

// CSV with header `kind,M,k,value`; the geodesic unreachable bin uses k=inf.
std::string distribution_csv(const EmpiricalDistribution& dist);

}  // namespace depnet

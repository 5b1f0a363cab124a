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
#include <string>
#include <string_view>
#include <vector>

#include "depnet/graph.hpp"
#include "depnet/models.hpp"
#include "depnet/statistics.hpp"

namespace depnet {

// One line of a study table.
struct StudyRow {
  std::string study;
  int n = 0;
  std::optional<double> alpha;
  std::optional<int> k;
  int replicate = 0;
  StatisticKind kind = StatisticKind::kDegree;
  double linf_error = 0.0;
  bool skipped = false;
};

struct ThetaSummaryRow {
  std::string study;
  int n = 0;
  std::optional<double> alpha;
  ThetaStarEstimate estimate;
};

struct Study1Config {
  std::vector<int> n_list{25, 50, 75, 100};
  int replications = 500;
  int theta_star_samples = 2500;
  CurvedErgm params{-3.5, 0.4, 0.75, EtaConvention::kAsPrinted, std::nullopt};
  int theta_star_chains = 16;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct Study2Config {
  std::vector<int> n_list{10, 25, 50, 75, 100};
  std::vector<double> alpha_list{0.0, 0.25};
  int replications = 500;
  int theta_star_samples = 2500;
  // Draw theta once per (N, alpha) instead of once per network.
  bool fix_theta = false;
  std::uint64_t seed = 1;
  int threads = 1;
};

struct SubsampleConfig {
  std::vector<int> k_list{1, 5, 25, 50, 100, 200};
  int replications = 500;
  std::uint64_t seed = 1;
  int threads = 1;
};

// Mean over networks of max_i E[d_i | theta] for one (N, alpha).
struct ExpectedDegreeRow {
  int n = 0;
  double alpha = 0.0;
  double mean_max_expected_degree = 0.0;
};

struct StudyResult {
  std::vector<StudyRow> rows;
  std::vector<ThetaSummaryRow> theta_star;
  std::vector<ExpectedDegreeRow> expected_degree;  // study 2 only
  std::string metadata_json;
};

StudyResult run_study1(const Study1Config& config);
StudyResult run_study2(const Study2Config& config);

// Override defaults from a JSON object; unknown keys are rejected.
Study1Config study1_config_from_json(std::string_view text);
Study2Config study2_config_from_json(std::string_view text);
SubsampleConfig subsample_config_from_json(std::string_view text);

// Study 2's theta draw: theta_i ~ N(-alpha log N, 1) independently.
std::vector<double> draw_study2_theta(int n, double alpha, Rng& rng);

// Least-squares slope of log y on log x.
double loglog_slope(std::span<const double> x, std::span<const double> y);

struct ClassNetwork {
  Graph graph;
  BlockStructure blocks;
  std::vector<int> respondents;  // 0-based, increasing
};

// Synthetic stand-in for a school-class network: `block_count` classes with
// sizes uniform on [size_low, size_high]; within each class a directed
// Bernoulli graph whose density is drawn uniformly from [0.1, 0.3]; no edges
// between classes. Each student responds independently with probability
// `response_rate`, so the median class response rate sits near it.
ClassNetwork generate_synthetic_classes(int block_count, int size_low, int size_high,
                                        double response_rate, std::uint64_t seed);

struct SubsampleResult {
  std::vector<StudyRow> rows;
  // Per (K, replicate) bin values of the subsample distribution.
  struct BinRow {
    int k = 0;
    int replicate = 0;
    std::vector<double> values;
  };
  std::vector<BinRow> bins;
  EmpiricalDistribution reference;
};

SubsampleResult run_subsample(const ClassNetwork& network, const SubsampleConfig& config);

// Tables. Study rows: study,N,alpha,K,replicate,kind,linf_error,skipped with
// empty cells where a column does not apply.
std::string study_csv(const std::vector<StudyRow>& rows);
std::string theta_summary_csv(const std::vector<ThetaSummaryRow>& rows);
std::string expected_degree_csv(const std::vector<ExpectedDegreeRow>& rows);
std::string subsample_bins_csv(const SubsampleResult& result);

// Minimal CSV table: header plus rows of raw cells. No quoting support.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(std::string_view name) const;  // throws when absent
};

CsvTable parse_csv(std::string_view text);

struct BoxStats {
  std::string group;
  double min = 0.0, q1 = 0.0, median = 0.0, q3 = 0.0, max = 0.0;
  double whisker_low = 0.0, whisker_high = 0.0;
  std::vector<double> outliers;
  std::size_t count = 0;
};

// Quartiles by linear interpolation between order statistics; whiskers reach
// the most extreme values within 1.5 IQR of the box.
BoxStats box_stats(std::string group, std::vector<double> values);

// Boxplot per group of `value_column`, grouped by `group_column` in order of
// first appearance. `filters` are "column=value" conditions all rows must
// meet. Rows whose value cell is empty are ignored.
std::string emit_svg_boxplot(std::string_view csv_text, std::string_view group_column,
                             std::string_view value_column,
                             const std::vector<std::string>& filters = {},
                             std::string_view title = {});

std::vector<BoxStats> grouped_box_stats(std::string_view csv_text, std::string_view group_column,
                                        std::string_view value_column,
                                        const std::vector<std::string>& filters = {});

}  // namespace depnet

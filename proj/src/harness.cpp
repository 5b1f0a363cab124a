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

#include "depnet/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "depnet/error.hpp"
#include "depnet/parallel.hpp"

namespace depnet {

namespace {

using nlohmann::json;

constexpr std::uint64_t kStudy1Tag = 0x5354317;
constexpr std::uint64_t kStudy2Tag = 0x5354327;
constexpr std::uint64_t kSubsampleTag = 0x5355427;
constexpr std::uint64_t kThetaTag = 0x7e7a;
constexpr std::uint64_t kReplicateTag = 0x4e9;

const StatisticKind kStudyKinds[] = {StatisticKind::kDegree, StatisticKind::kEsp,
                                     StatisticKind::kGeodesic};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::uint64_t bits_of(double v) {
  std::uint64_t b;
  std::memcpy(&b, &v, sizeof b);
  return b;
}

// Sup-norm error of one replicate per kind against the theta* estimates.
void score(const Graph& g, const std::vector<ThetaSummaryRow>& theta, StudyRow base,
           std::vector<StudyRow>& out) {
  for (const auto& t : theta) {
    StudyRow row = base;
    row.kind = t.estimate.kind;
    try {
      row.linf_error = linf_error(compute_distribution(g, t.estimate.kind).values, t.estimate.mean);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kUndefined) throw;
      row.skipped = true;
    }
    out.push_back(row);
  }
}

std::vector<ThetaSummaryRow> summarize_kinds(const std::string& study, int n,
                                             std::optional<double> alpha,
                                             std::span<const Graph> graphs) {
  std::vector<ThetaSummaryRow> out;
  for (StatisticKind kind : kStudyKinds)
    out.push_back({study, n, alpha, summarize_theta_star(graphs, kind)});
  return out;
}

template <class Config>
void check_common(const Config& c) {
  require(c.replications >= 1, "replications must be at least 1");
  require(c.theta_star_samples >= 2, "theta_star_samples must be at least 2");
  require(!c.n_list.empty(), "N_list must not be empty");
}

void reject_unknown(const json& j, std::initializer_list<const char*> keys) {
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return key == k; }))
      fail(ErrorCode::kParse, "config: unknown key '" + key + "'");
  }
}

json parse_object(std::string_view text) {
  if (text.empty()) return json::object();
  try {
    json j = json::parse(text);
    if (!j.is_object()) fail(ErrorCode::kParse, "config: expected a JSON object");
    return j;
  } catch (const json::parse_error& e) {
    fail(ErrorCode::kParse, std::string("config: ") + e.what());
  }
}

template <class Fn>
auto with_json_errors(Fn fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("config: ") + e.what());
  }
}

double quantile(const std::vector<double>& sorted, double q) {
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::vector<double> draw_study2_theta(int n, double alpha, Rng& rng) {
  std::vector<double> theta(n);
  const double mean = -alpha * std::log(static_cast<double>(n));
  for (double& t : theta) t = rng.normal(mean, 1.0);
  return theta;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 2, "slope needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    require(x[i] > 0.0 && y[i] > 0.0, "log-log slope needs positive values");
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= x.size();
  my /= x.size();
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  require(sxx > 0.0, "slope needs at least two distinct x values");
  return sxy / sxx;
}

StudyResult run_study1(const Study1Config& c) {
  check_common(c);
  require(c.theta_star_chains >= 1, "theta_star_chains must be at least 1");
  StudyResult result;
  json schedules = json::array();
  for (int n : c.n_list) {
    require(n >= 3, "study 1 needs N >= 3");
    const ModelSpec spec = curved_ergm(n, c.params);
    const McmcSchedule s = c.params.schedule.value_or(default_schedule(n));
    schedules.push_back({{"N", n}, {"burn_in", s.burn_in}, {"thin", s.thin}});

    auto theta_graphs = sample_many(spec, c.theta_star_samples,
                                    derive_seed(c.seed, {kStudy1Tag, kThetaTag, std::uint64_t(n)}),
                                    c.threads, c.theta_star_chains);
    auto theta = summarize_kinds("study1", n, std::nullopt, theta_graphs);
    theta_graphs.clear();

    auto replicates =
        sample_many(spec, c.replications,
                    derive_seed(c.seed, {kStudy1Tag, kReplicateTag, std::uint64_t(n)}), c.threads);
    std::vector<std::vector<StudyRow>> per(replicates.size());
    parallel_for(replicates.size(), c.threads, [&](std::size_t r) {
      StudyRow base;
      base.study = "study1";
      base.n = n;
      base.replicate = static_cast<int>(r);
      score(replicates[r], theta, base, per[r]);
    });
    for (auto& rows : per) result.rows.insert(result.rows.end(), rows.begin(), rows.end());
    result.theta_star.insert(result.theta_star.end(), theta.begin(), theta.end());
  }
  json meta = {{"study", "study1"},
               {"seed", c.seed},
               {"theta1", c.params.theta1},
               {"theta2", c.params.theta2},
               {"theta3", c.params.theta3},
               {"eta_convention", convention_name(c.params.convention)},
               {"replications", c.replications},
               {"theta_star_samples", c.theta_star_samples},
               {"theta_star_chains", c.theta_star_chains},
               {"proposal", "uniform pair toggle, Metropolis acceptance"},
               {"replicate_sampling", "independent chain per replicate, started empty"},
               {"mcmc_schedule", schedules}};
  result.metadata_json = meta.dump(2);
  return result;
}

StudyResult run_study2(const Study2Config& c) {
  check_common(c);
  require(!c.alpha_list.empty(), "alpha_list must not be empty");
  StudyResult result;
  for (int n : c.n_list) {
    require(n >= 2, "study 2 needs N >= 2");
    for (double alpha : c.alpha_list) {
      const std::uint64_t a = bits_of(alpha);
      std::vector<double> fixed;
      if (c.fix_theta) {
        Rng rng(derive_seed(c.seed, {kStudy2Tag, std::uint64_t(n), a, 0xF1}));
        fixed = draw_study2_theta(n, alpha, rng);
      }
      // Theta draw then network draw, both from one stream.
      auto draw = [&](std::uint64_t seed, double* max_expected) {
        Rng rng(seed);
        std::vector<double> theta = c.fix_theta ? fixed : draw_study2_theta(n, alpha, rng);
        const auto probs = beta_model_probs(theta);
        if (max_expected != nullptr) {
          const auto deg = expected_degrees(probs, n);
          *max_expected = *std::max_element(deg.begin(), deg.end());
        }
        return sample_bernoulli(probs, n, false, rng);
      };

      std::vector<Graph> theta_graphs(c.theta_star_samples);
      parallel_for(theta_graphs.size(), c.threads, [&](std::size_t i) {
        theta_graphs[i] = draw(derive_seed(c.seed, {kStudy2Tag, kThetaTag, std::uint64_t(n), a, i}),
                               nullptr);
      });
      auto theta = summarize_kinds("study2", n, alpha, theta_graphs);
      theta_graphs.clear();

      std::vector<std::vector<StudyRow>> per(c.replications);
      std::vector<double> max_expected(c.replications, 0.0);
      parallel_for(per.size(), c.threads, [&](std::size_t r) {
        Graph g = draw(derive_seed(c.seed, {kStudy2Tag, kReplicateTag, std::uint64_t(n), a, r}),
                       &max_expected[r]);
        StudyRow base;
        base.study = "study2";
        base.n = n;
        base.alpha = alpha;
        base.replicate = static_cast<int>(r);
        score(g, theta, base, per[r]);
      });
      for (auto& rows : per) result.rows.insert(result.rows.end(), rows.begin(), rows.end());
      result.theta_star.insert(result.theta_star.end(), theta.begin(), theta.end());
      result.expected_degree.push_back(
          {n, alpha,
           std::accumulate(max_expected.begin(), max_expected.end(), 0.0) / c.replications});
    }
  }
  json meta = {{"study", "study2"},
               {"seed", c.seed},
               {"replications", c.replications},
               {"theta_star_samples", c.theta_star_samples},
               {"theta_scheme", c.fix_theta ? "fixed per (N, alpha)" : "redrawn per network"},
               {"alpha_list", c.alpha_list}};
  result.metadata_json = meta.dump(2);
  return result;
}

Study1Config study1_config_from_json(std::string_view text) {
  return with_json_errors([&] {
    const json j = parse_object(text);
    reject_unknown(j, {"study", "N_list", "replications", "theta_star_samples", "theta1", "theta2",
                       "theta3", "eta_convention", "burn_in", "thin", "theta_star_chains", "seed",
                       "threads"});
    Study1Config c;
    c.n_list = j.value("N_list", c.n_list);
    c.replications = j.value("replications", c.replications);
    c.theta_star_samples = j.value("theta_star_samples", c.theta_star_samples);
    c.params.theta1 = j.value("theta1", c.params.theta1);
    c.params.theta2 = j.value("theta2", c.params.theta2);
    c.params.theta3 = j.value("theta3", c.params.theta3);
    if (j.contains("eta_convention"))
      c.params.convention = parse_convention(j["eta_convention"].get<std::string>());
    if (j.contains("burn_in") || j.contains("thin")) {
      // Explicit values apply to every N.
      require(j.contains("burn_in") && j.contains("thin"),
              "config: burn_in and thin must be given together");
      c.params.schedule = McmcSchedule{j["burn_in"].get<std::int64_t>(), j["thin"].get<std::int64_t>()};
    }
    c.theta_star_chains = j.value("theta_star_chains", c.theta_star_chains);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    require(c.params.theta3 >= 0.0, "theta3 must be non-negative");
    return c;
  });
}

Study2Config study2_config_from_json(std::string_view text) {
  return with_json_errors([&] {
    const json j = parse_object(text);
    reject_unknown(j, {"study", "N_list", "alpha_list", "replications", "theta_star_samples",
                       "fix_theta", "seed", "threads"});
    Study2Config c;
    c.n_list = j.value("N_list", c.n_list);
    c.alpha_list = j.value("alpha_list", c.alpha_list);
    c.replications = j.value("replications", c.replications);
    c.theta_star_samples = j.value("theta_star_samples", c.theta_star_samples);
    c.fix_theta = j.value("fix_theta", c.fix_theta);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    return c;
  });
}

SubsampleConfig subsample_config_from_json(std::string_view text) {
  return with_json_errors([&] {
    const json j = parse_object(text);
    reject_unknown(j, {"study", "K_list", "replications", "seed", "threads"});
    SubsampleConfig c;
    c.k_list = j.value("K_list", c.k_list);
    c.replications = j.value("replications", c.replications);
    c.seed = j.value("seed", c.seed);
    c.threads = j.value("threads", c.threads);
    return c;
  });
}

ClassNetwork generate_synthetic_classes(int block_count, int size_low, int size_high,
                                        double response_rate, std::uint64_t seed) {
  require(block_count >= 1, "block count must be at least 1");
  require(size_low >= 2 && size_low <= size_high, "block sizes need 2 <= low <= high");
  require(response_rate > 0.0 && response_rate <= 1.0, "response rate must lie in (0, 1]");
  Rng rng(seed);
  std::vector<int> assignment;
  for (int b = 0; b < block_count; ++b) {
    const int size = size_low + static_cast<int>(rng.below(size_high - size_low + 1));
    assignment.insert(assignment.end(), size, b);
  }
  const int n = static_cast<int>(assignment.size());
  BlockStructure blocks(std::move(assignment));
  GraphBuilder builder(n, true);
  for (int b = 0; b < block_count; ++b) {
    const double p = 0.1 + 0.2 * rng.uniform();
    const auto& members = blocks.members(b);
    for (int i : members)
      for (int j : members)
        if (i != j && rng.bernoulli(p)) builder.set_edge(i, j);
  }
  std::vector<int> respondents;
  for (int i = 0; i < n; ++i)
    if (response_rate >= 1.0 || rng.bernoulli(response_rate)) respondents.push_back(i);
  return {builder.build(), std::move(blocks), std::move(respondents)};
}

SubsampleResult run_subsample(const ClassNetwork& net, const SubsampleConfig& c) {
  require(c.replications >= 1, "replications must be at least 1");
  const int block_total = net.blocks.block_count();
  for (int k : c.k_list) {
    require(k >= 1, "K must be at least 1");
    if (k > block_total)
      fail(ErrorCode::kInvalidArgument, "K = " + std::to_string(k) + " exceeds the block count " +
                                            std::to_string(block_total));
  }
  auto blocks = std::make_shared<const BlockStructure>(net.blocks);
  auto stat_for = [&](std::vector<int> respondents) {
    Statistic s(StatisticKind::kWithinBlockOutDegree);
    s.blocks = blocks;
    s.respondents = std::move(respondents);
    return s;
  };
  SubsampleResult result;
  result.reference = compute_distribution(net.graph, stat_for(net.respondents));

  std::vector<std::vector<int>> respondents_of(block_total);
  for (int v : net.respondents) respondents_of[net.blocks.block_of(v)].push_back(v);

  const std::size_t draws = c.k_list.size() * static_cast<std::size_t>(c.replications);
  result.rows.resize(draws);
  result.bins.resize(draws);
  parallel_for(draws, c.threads, [&](std::size_t d) {
    const int k = c.k_list[d / c.replications];
    const int rep = static_cast<int>(d % c.replications);
    Rng rng(derive_seed(c.seed, {kSubsampleTag, std::uint64_t(k), std::uint64_t(rep)}));
    std::vector<int> order(block_total);
    std::iota(order.begin(), order.end(), 0);
    // Partial Fisher-Yates: the first k entries are a uniform k-subset.
    for (int i = 0; i < k; ++i) {
      const int j = i + static_cast<int>(rng.below(block_total - i));
      std::swap(order[i], order[j]);
    }
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i)
      chosen.insert(chosen.end(), respondents_of[order[i]].begin(), respondents_of[order[i]].end());
    std::sort(chosen.begin(), chosen.end());

    StudyRow& row = result.rows[d];
    row.study = "subsample";
    row.n = net.graph.n();
    row.k = k;
    row.replicate = rep;
    row.kind = StatisticKind::kWithinBlockOutDegree;
    result.bins[d].k = k;
    result.bins[d].replicate = rep;
    if (chosen.empty()) {
      row.skipped = true;
      return;
    }
    auto dist = compute_distribution(net.graph, stat_for(std::move(chosen)));
    row.linf_error = linf_error(dist, result.reference);
    result.bins[d].values = std::move(dist.values);
  });
  return result;
}

std::string study_csv(const std::vector<StudyRow>& rows) {
  std::ostringstream out;
  out << "study,N,alpha,K,replicate,kind,linf_error,skipped\n";
  for (const auto& r : rows) {
    out << r.study << ',' << r.n << ',' << (r.alpha ? fmt(*r.alpha) : "") << ','
        << (r.k ? std::to_string(*r.k) : "") << ',' << r.replicate << ',' << kind_name(r.kind)
        << ',' << (r.skipped ? "" : fmt(r.linf_error)) << ',' << (r.skipped ? 1 : 0) << '\n';
  }
  return out.str();
}

std::string theta_summary_csv(const std::vector<ThetaSummaryRow>& rows) {
  std::ostringstream out;
  out << "study,N,alpha,kind,k,mean,se,n_samples,skipped\n";
  for (const auto& r : rows) {
    const auto& e = r.estimate;
    for (std::size_t k = 0; k < e.mean.size(); ++k) {
      const bool unreachable = e.kind == StatisticKind::kGeodesic && k + 1 == e.mean.size();
      const std::string label = e.kind == StatisticKind::kGeodesic
                                    ? (unreachable ? "inf" : std::to_string(k + 1))
                                    : std::to_string(k);
      out << r.study << ',' << r.n << ',' << (r.alpha ? fmt(*r.alpha) : "") << ','
          << kind_name(e.kind) << ',' << label << ',' << fmt(e.mean[k]) << ','
          << fmt(e.std_errors[k]) << ',' << e.n_samples << ',' << e.skipped << '\n';
    }
  }
  return out.str();
}

std::string expected_degree_csv(const std::vector<ExpectedDegreeRow>& rows) {
  std::ostringstream out;
  out << "N,alpha,mean_max_expected_degree\n";
  for (const auto& r : rows)
    out << r.n << ',' << fmt(r.alpha) << ',' << fmt(r.mean_max_expected_degree) << '\n';
  return out.str();
}

std::string subsample_bins_csv(const SubsampleResult& result) {
  std::ostringstream out;
  out << "K,replicate,k,value\n";
  for (const auto& b : result.bins)
    for (std::size_t k = 0; k < b.values.size(); ++k)
      out << b.k << ',' << b.replicate << ',' << k << ',' << fmt(b.values[k]) << '\n';
  return out.str();
}

int CsvTable::column(std::string_view name) const {
  for (std::size_t i = 0; i < header.size(); ++i)
    if (header[i] == name) return static_cast<int>(i);
  fail(ErrorCode::kInvalidArgument, "CSV has no column '" + std::string(name) + "'");
}

CsvTable parse_csv(std::string_view text) {
  CsvTable t;
  auto split = [](std::string_view line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (;;) {
      auto comma = line.find(',', start);
      cells.emplace_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    return cells;
  };
  std::size_t pos = 0;
  int line_no = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    std::string_view line = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    pos = end == std::string_view::npos ? text.size() : end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (t.header.empty()) {
      t.header = split(line);
      continue;
    }
    auto cells = split(line);
    if (cells.size() != t.header.size())
      throw ParseError(line_no, "expected " + std::to_string(t.header.size()) + " cells");
    t.rows.push_back(std::move(cells));
  }
  if (t.header.empty()) fail(ErrorCode::kParse, "CSV is empty");
  return t;
}

BoxStats box_stats(std::string group, std::vector<double> values) {
  if (values.empty()) fail(ErrorCode::kInvalidArgument, "group '" + group + "' has no values");
  std::sort(values.begin(), values.end());
  BoxStats b;
  b.group = std::move(group);
  b.count = values.size();
  b.min = values.front();
  b.max = values.back();
  b.q1 = quantile(values, 0.25);
  b.median = quantile(values, 0.5);
  b.q3 = quantile(values, 0.75);
  const double fence = 1.5 * (b.q3 - b.q1);
  b.whisker_low = b.q1;
  b.whisker_high = b.q3;
  for (double v : values) {
    if (v < b.q1 - fence || v > b.q3 + fence) {
      b.outliers.push_back(v);
    } else {
      b.whisker_low = std::min(b.whisker_low, v);
      b.whisker_high = std::max(b.whisker_high, v);
    }
  }
  return b;
}

std::vector<BoxStats> grouped_box_stats(std::string_view csv_text, std::string_view group_column,
                                        std::string_view value_column,
                                        const std::vector<std::string>& filters) {
  const CsvTable t = parse_csv(csv_text);
  const int gc = t.column(group_column);
  const int vc = t.column(value_column);
  std::vector<std::pair<int, std::string>> conds;
  for (const auto& f : filters) {
    auto eq = f.find('=');
    require(eq != std::string::npos, "filter must look like column=value");
    conds.emplace_back(t.column(f.substr(0, eq)), f.substr(eq + 1));
  }
  std::vector<std::string> order;
  std::vector<std::vector<double>> values;
  for (const auto& row : t.rows) {
    if (!std::all_of(conds.begin(), conds.end(),
                     [&](const auto& c) { return row[c.first] == c.second; }))
      continue;
    auto it = std::find(order.begin(), order.end(), row[gc]);
    const std::size_t g = it - order.begin();
    if (it == order.end()) {
      order.push_back(row[gc]);
      values.emplace_back();
    }
    if (row[vc].empty()) continue;
    try {
      values[g].push_back(std::stod(row[vc]));
    } catch (const std::exception&) {
      fail(ErrorCode::kParse, "non-numeric value '" + row[vc] + "'");
    }
  }
  if (order.empty()) fail(ErrorCode::kInvalidArgument, "no rows match");
  std::vector<BoxStats> boxes;
  for (std::size_t g = 0; g < order.size(); ++g) boxes.push_back(box_stats(order[g], values[g]));
  return boxes;
}

std::string emit_svg_boxplot(std::string_view csv_text, std::string_view group_column,
                             std::string_view value_column, const std::vector<std::string>& filters,
                             std::string_view title) {
  const auto boxes = grouped_box_stats(csv_text, group_column, value_column, filters);
  double lo = boxes[0].min, hi = boxes[0].max;
  for (const auto& b : boxes) {
    lo = std::min(lo, b.min);
    hi = std::max(hi, b.max);
  }
  if (hi - lo < 1e-12) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double left = 70, top = 40, plot_h = 300, slot = 80;
  const double plot_w = slot * boxes.size();
  const double width = left + plot_w + 20, height = top + plot_h + 60;
  auto y = [&](double v) { return top + plot_h * (hi - v) / (hi - lo); };

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height)
      << "\">\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height)
      << "\" fill=\"white\"/>\n";
  if (!title.empty())
    svg << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"20\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"14\">" << xml_escape(title) << "</text>\n";
  svg << "<line x1=\"" << num(left) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left)
      << "\" y2=\"" << num(top + plot_h) << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double v = lo + (hi - lo) * t / 4.0;
    svg << "<text x=\"" << num(left - 6) << "\" y=\"" << num(y(v) + 4)
        << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"10\">"
        << xml_escape(fmt(std::round(v * 1e4) / 1e4)) << "</text>\n";
  }
  svg << "<text x=\"16\" y=\"" << num(top + plot_h / 2) << "\" transform=\"rotate(-90 16 "
      << num(top + plot_h / 2) << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" "
      << "font-size=\"12\">" << xml_escape(value_column) << "</text>\n";
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    const auto& b = boxes[i];
    const double cx = left + slot * (i + 0.5);
    const double half = slot * 0.3;
    svg << "<g class=\"box\" data-group=\"" << xml_escape(b.group) << "\">\n";
    svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(y(b.whisker_high)) << "\" x2=\""
        << num(cx) << "\" y2=\"" << num(y(b.q3)) << "\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(cx) << "\" y1=\"" << num(y(b.q1)) << "\" x2=\"" << num(cx)
        << "\" y2=\"" << num(y(b.whisker_low)) << "\" stroke=\"black\"/>\n";
    for (double w : {b.whisker_low, b.whisker_high})
      svg << "<line x1=\"" << num(cx - half / 2) << "\" y1=\"" << num(y(w)) << "\" x2=\""
          << num(cx + half / 2) << "\" y2=\"" << num(y(w)) << "\" stroke=\"black\"/>\n";
    svg << "<rect x=\"" << num(cx - half) << "\" y=\"" << num(y(b.q3)) << "\" width=\""
        << num(2 * half) << "\" height=\"" << num(y(b.q1) - y(b.q3))
        << "\" fill=\"#9ecae1\" stroke=\"black\"/>\n";
    svg << "<line x1=\"" << num(cx - half) << "\" y1=\"" << num(y(b.median)) << "\" x2=\""
        << num(cx + half) << "\" y2=\"" << num(y(b.median))
        << "\" stroke=\"black\" stroke-width=\"2\"/>\n";
    for (double o : b.outliers)
      svg << "<circle cx=\"" << num(cx) << "\" cy=\"" << num(y(o))
          << "\" r=\"2\" fill=\"none\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << num(cx) << "\" y=\"" << num(top + plot_h + 18)
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
        << xml_escape(b.group) << "</text>\n";
    svg << "</g>\n";
  }
  svg << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(top + plot_h + 42)
      << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
      << xml_escape(group_column) << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace depnet

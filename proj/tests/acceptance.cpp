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

// Acceptance checks. `depnet_acceptance <n>` runs criterion n (or all with
// no argument) and prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <thread>

#include "depnet/bounds.hpp"
#include "depnet/error.hpp"
#include "depnet/harness.hpp"
#include "depnet/oracle.hpp"
#include "test_util.hpp"

using namespace depnet;

namespace {

// Tolerances.
constexpr double kSlack = 1e-12;
constexpr double kSlopeTolerance = 0.15;
constexpr double kMaxThetaSe = 0.01;
constexpr double kCriterion1Seconds = 10.0;
constexpr double kCriterion6Seconds = 30 * 60.0;
constexpr double kCriterion7Seconds = 10 * 60.0;
constexpr double kCriterion9Seconds = 5 * 60.0;
constexpr int kPropertyCases = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int worker_threads() {
  if (const char* env = std::getenv("DEPNET_THREADS")) return std::max(1, std::atoi(env));
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Instance {
  std::string name;
  ModelSpec spec;
};

std::vector<Instance> lemma_instances() {
  std::vector<Instance> out;
  for (int n : {3, 4})
    for (double p : {0.3, 0.5, 0.7})
      out.push_back({"bernoulli(n=" + std::to_string(n) + ",p=" + fmt(p) + ")",
                     homogeneous_bernoulli(n, p, false)});
  out.push_back({"beta(0.5,-0.5,0.2,0)", beta_model({0.5, -0.5, 0.2, 0.0})});
  out.push_back({"ergm(-1,0.3,0.5)",
                 curved_ergm(4, {-1.0, 0.3, 0.5, EtaConvention::kAsPrinted, std::nullopt})});
  return out;
}

std::vector<double> t_grid() {
  std::vector<double> t;
  for (int i = 1; i <= 19; ++i) t.push_back(0.05 * i);
  return t;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Type-7 quantile, matching the boxplot.
double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double h = (v.size() - 1) * q;
  const std::size_t lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (h - lo) * (v[hi] - v[lo]);
}

std::vector<double> errors_of(const std::vector<StudyRow>& rows, StatisticKind kind,
                              std::function<bool(const StudyRow&)> keep) {
  std::vector<double> out;
  for (const auto& r : rows)
    if (r.kind == kind && !r.skipped && keep(r)) out.push_back(r.linf_error);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const auto start = Clock::now();
  int violations = 0, checked = 0;
  for (const auto& inst : lemma_instances()) {
    auto report = verify_lemma1(exact_distribution(inst.spec), StatisticKind::kDegree, t_grid());
    checked += static_cast<int>(report.rows.size());
    violations += report.violations;
    if (!report.ok()) o.detail += " violation in " + inst.name + ";";
  }
  const double secs = seconds_since(start);
  o.pass = violations == 0 && secs < kCriterion1Seconds;
  o.detail = std::to_string(violations) + " violations over " + std::to_string(checked) +
             " (instance, t) pairs in " + fmt(secs) + " s" + o.detail;
  return o;
}

Outcome criterion2() {
  Outcome o;
  double worst = -1e300;
  for (const auto& inst : lemma_instances()) {
    auto prof = compute_dependence_profile(exact_distribution(inst.spec), StatisticKind::kDegree);
    if (!prof.delta_n) {
      o.pass = false;
      o.detail += " Delta_N undefined for " + inst.name + ";";
      continue;
    }
    worst = std::max(worst, *prof.delta_n - prof.prop1_bound);
    if (*prof.delta_n > prof.prop1_bound + kSlack) {
      o.pass = false;
      o.detail += " " + inst.name + ": Delta_N " + fmt(*prof.delta_n) + " > " +
                  fmt(prof.prop1_bound) + ";";
    }
  }
  o.detail = "max(Delta_N - bound) = " + fmt(worst) + o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::vector<ModelSpec> specs;
  for (int n : {4, 5})
    for (double p : {0.1, 0.3, 0.5, 0.7, 0.9}) specs.push_back(homogeneous_bernoulli(n, p, false));
  // Heterogeneous edge probabilities.
  for (int n : {4, 5}) {
    Rng rng(static_cast<std::uint64_t>(n));
    std::vector<double> probs(n * n, 0.0);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) probs[i * n + j] = probs[j * n + i] = 0.05 + 0.9 * rng.uniform();
    specs.push_back(bernoulli_model(probs, n, false));
    std::vector<double> theta(n);
    for (double& t : theta) t = 2 * rng.uniform() - 1;
    specs.push_back(beta_model(theta));
  }
  int failures = 0;
  double min_gap = 1e300;
  for (const auto& spec : specs) {
    auto prof = compute_dependence_profile(exact_distribution(spec), StatisticKind::kDegree);
    const auto degrees = expected_degrees(edge_probabilities(spec), spec.n);
    const double bound = cor_bern_bound(degrees, spec.n, 0.05).delta_bound;
    if (!prof.delta_n || *prof.delta_n > bound + kSlack) ++failures;
    if (prof.delta_n) min_gap = std::min(min_gap, bound - *prof.delta_n);
  }
  const double golden = cor_bern_bound(
      expected_degrees(edge_probabilities(homogeneous_bernoulli(4, 0.5, false)), 4), 4, 0.05)
                            .delta_bound;
  const bool golden_ok = std::fabs(golden - 3.0) < kSlack;
  o.pass = failures == 0 && golden_ok;
  o.detail = std::to_string(failures) + " of " + std::to_string(specs.size()) +
             " instances exceed the bound (min gap " + fmt(min_gap) + "); p=0.5, n=4 bound = " +
             fmt(golden);
  return o;
}

Outcome criterion4() {
  Outcome o;
  int violations = 0, checked = 0;
  for (const auto& inst : lemma_instances()) {
    auto dist = exact_distribution(inst.spec);
    auto prof = compute_dependence_profile(dist, StatisticKind::kDegree);
    std::vector<BoundReport> reports{thm1_exp_radius(prof.d_n, prof.basis_count, prof.bins - 1)};
    for (double alpha : {0.01, 0.05, 0.1, 0.25, 0.5, 0.9})
      reports.push_back(thm1_cheb_radius(prof.c_n, prof.delta_n.value_or(prof.c_n),
                                         prof.basis_count, alpha));
    for (const auto& r : reports) {
      ++checked;
      const double coverage = 1.0 - exact_tail_prob(dist, StatisticKind::kDegree, r.radius);
      if (coverage < r.confidence - kSlack) {
        ++violations;
        o.detail += " " + inst.name + " " + std::string(bound_name(r.id)) + ";";
      }
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(violations) + " violations over " + std::to_string(checked) +
             " bound reports" + o.detail;
  return o;
}

ModelSpec directed_two_blocks(const std::vector<int>& assignment, std::uint64_t seed) {
  BlockStructure blocks(assignment);
  Rng rng(seed);
  std::vector<ModelSpec> within;
  for (int b = 0; b < blocks.block_count(); ++b) {
    const int size = static_cast<int>(blocks.members(b).size());
    std::vector<double> probs(size * size, 0.0);
    for (int i = 0; i < size; ++i)
      for (int j = 0; j < size; ++j)
        if (i != j) probs[i * size + j] = 0.1 + 0.8 * rng.uniform();
    within.push_back(bernoulli_model(probs, size, true));
  }
  const int n = static_cast<int>(assignment.size());
  return local_dependence(blocks, std::move(within),
                          BernoulliModel{std::vector<double>(n * n, 0.0)}, true);
}

Outcome criterion5() {
  Outcome o;
  const std::vector<std::vector<int>> layouts{{0, 0, 1, 1}, {0, 0, 0, 1, 1, 1}, {0, 1, 0, 0, 1, 1}};
  std::uint64_t seed = 1;
  for (const auto& layout : layouts) {
    BlockStructure blocks(layout);
    auto spec = directed_two_blocks(layout, seed++);
    auto dist = exact_distribution(spec);
    auto prof = compute_dependence_profile(dist, Statistic::within_block(blocks));
    double cross = 0.0;
    for (int k = 0; k < prof.bins; ++k)
      for (int i = 0; i < prof.basis_count; ++i)
        for (int j = 0; j < prof.basis_count; ++j)
          if (i != j && blocks.block_of(i) != blocks.block_of(j))
            cross = std::max(cross, std::fabs(prof.covariance_at(k, i, j)));
    const bool ok = prof.d_n <= blocks.largest_block() + kSlack && cross <= kSlack;
    o.pass = o.pass && ok;
    o.detail += "n=" + std::to_string(layout.size()) + ": D_N=" + fmt(prof.d_n) + " (max block " +
                std::to_string(blocks.largest_block()) + "), max cross cov " + fmt(cross) + "; ";
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  const auto start = Clock::now();
  Study1Config c;
  c.n_list = {25, 50};
  c.replications = 100;
  c.theta_star_samples = 500;
  c.seed = 20260101;
  c.threads = worker_threads();
  auto result = run_study1(c);
  const double secs = seconds_since(start);
  for (StatisticKind kind : {StatisticKind::kDegree, StatisticKind::kEsp, StatisticKind::kGeodesic}) {
    const double m25 = median(errors_of(result.rows, kind, [](const StudyRow& r) { return r.n == 25; }));
    const double m50 = median(errors_of(result.rows, kind, [](const StudyRow& r) { return r.n == 50; }));
    o.pass = o.pass && m50 < m25;
    o.detail += std::string(kind_name(kind)) + " median " + fmt(m25) + " -> " + fmt(m50) + "; ";
  }
  o.pass = o.pass && secs < kCriterion6Seconds;
  o.detail += fmt(secs) + " s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  const auto start = Clock::now();
  Study2Config c;
  c.n_list = {10, 25, 50};
  c.alpha_list = {0.0, 0.25};
  c.replications = 200;
  c.seed = 20260102;
  c.threads = worker_threads();
  auto result = run_study2(c);
  const double secs = seconds_since(start);
  for (double alpha : c.alpha_list) {
    std::vector<double> medians;
    for (int n : c.n_list)
      medians.push_back(median(errors_of(result.rows, StatisticKind::kDegree, [&](const StudyRow& r) {
        return r.n == n && r.alpha && *r.alpha == alpha;
      })));
    bool decreasing = true;
    for (std::size_t i = 1; i < medians.size(); ++i) decreasing = decreasing && medians[i] < medians[i - 1];
    std::vector<double> xs, ys;
    for (const auto& e : result.expected_degree)
      if (e.alpha == alpha) {
        xs.push_back(e.n);
        ys.push_back(e.mean_max_expected_degree);
      }
    const double slope = loglog_slope(xs, ys);
    const double target = 1.0 - 2.0 * alpha;
    const bool slope_ok = std::fabs(slope - target) <= kSlopeTolerance;
    o.pass = o.pass && decreasing && slope_ok;
    o.detail += "alpha=" + fmt(alpha) + ": medians";
    for (double m : medians) o.detail += " " + fmt(m);
    o.detail += (decreasing ? " (decreasing)" : " (NOT decreasing)");
    o.detail += ", slope " + fmt(slope) + " vs " + fmt(target) + (slope_ok ? "" : " (outside tolerance)") + "; ";
  }
  o.pass = o.pass && secs < kCriterion7Seconds;
  o.detail += fmt(secs) + " s";
  return o;
}

Outcome criterion8() {
  Outcome o;
  Study1Config c;
  auto spec = curved_ergm(25, c.params);
  auto graphs = sample_many(spec, 2500, 20260103, worker_threads(), c.theta_star_chains);
  for (StatisticKind kind : {StatisticKind::kDegree, StatisticKind::kEsp, StatisticKind::kGeodesic}) {
    auto est = summarize_theta_star(graphs, kind);
    const double se = est.max_std_error();
    o.pass = o.pass && se < kMaxThetaSe;
    o.detail += std::string(kind_name(kind)) + " max SE " + fmt(se) + " (" +
                std::to_string(est.n_samples) + " samples); ";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto start = Clock::now();
  auto net = generate_synthetic_classes(304, 15, 33, 0.87, 20260104);
  std::vector<double> rates;
  for (int b = 0; b < net.blocks.block_count(); ++b) {
    const auto& members = net.blocks.members(b);
    int responded = 0;
    for (int v : members)
      responded += std::binary_search(net.respondents.begin(), net.respondents.end(), v);
    rates.push_back(static_cast<double>(responded) / members.size());
  }
  SubsampleConfig c;
  c.k_list = {1, 5, 25, 50, 100, 200, 304};
  c.seed = 20260105;
  c.threads = worker_threads();
  auto result = run_subsample(net, c);
  double full_error = 0.0;
  std::vector<double> iqrs;
  for (int k : c.k_list) {
    auto errs = errors_of(result.rows, StatisticKind::kWithinBlockOutDegree,
                          [&](const StudyRow& r) { return r.k && *r.k == k; });
    if (k == 304) {
      full_error = *std::max_element(errs.begin(), errs.end());
      continue;
    }
    iqrs.push_back(quantile(errs, 0.75) - quantile(errs, 0.25));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < iqrs.size(); ++i) decreasing = decreasing && iqrs[i] < iqrs[i - 1];
  const double secs = seconds_since(start);
  o.pass = full_error == 0.0 && decreasing && secs < kCriterion9Seconds;
  o.detail = "median class response " + fmt(median(rates)) + "; error at K=304 " + fmt(full_error) +
             "; IQR by K:";
  for (double q : iqrs) o.detail += " " + fmt(q);
  o.detail += decreasing ? " (decreasing); " : " (NOT decreasing); ";
  o.detail += fmt(secs) + " s";
  return o;
}

Outcome criterion10() {
  Outcome o;
  namespace dt = depnet::testing;
  Rng rng(20260106);
  int normalisation = 0, permutation = 0, round_trip = 0, determinism = 0;
  for (int c = 0; c < kPropertyCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(29));
    Graph g = dt::random_graph(n, false, rng.uniform(), rng);
    std::vector<std::vector<double>> dists{degree_distribution(g).values,
                                           geodesic_distribution(g).values};
    if (g.edge_count() > 0) dists.push_back(esp_distribution(g).values);
    for (const auto& d : dists)
      if (std::fabs(dt::sum(d) - 1.0) > kSlack) ++normalisation;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(std::span<int>(perm));
    Graph h = g.permuted(perm);
    if (degree_distribution(h).values != dists[0] || geodesic_distribution(h).values != dists[1] ||
        (g.edge_count() > 0 && esp_distribution(h).values != dists[2]))
      ++permutation;

    Graph d = dt::random_graph(n, true, rng.uniform(), rng);
    if (parse_edge_list(serialize_edge_list(g)).graph != g ||
        parse_edge_list(serialize_edge_list(d)).graph != d)
      ++round_trip;

    const std::uint64_t seed = rng();
    auto spec = homogeneous_bernoulli(std::min(n, 10), rng.uniform(), false);
    if (sample_many(spec, 4, seed, 1) != sample_many(spec, 4, seed, 3)) ++determinism;
  }
  // Exact laws of random small models.
  int exact = 0;
  for (int c = 0; c < kPropertyCases; ++c) {
    const int n = 2 + static_cast<int>(rng.below(3));
    auto spec = curved_ergm(n, {4 * rng.uniform() - 2, 2 * rng.uniform() - 1, rng.uniform(),
                                EtaConvention::kAsPrinted, std::nullopt});
    auto dist = exact_distribution(spec);
    if (std::fabs(dt::sum(dist.probs) - 1.0) > kSlack) ++exact;
  }
  o.pass = normalisation + permutation + round_trip + determinism + exact == 0;
  o.detail = std::to_string(kPropertyCases) + " cases each; failures: normalisation " +
             std::to_string(normalisation) + ", permutation " + std::to_string(permutation) +
             ", round trip " + std::to_string(round_trip) + ", parallel determinism " +
             std::to_string(determinism) + ", exact normalisation " + std::to_string(exact);
  return o;
}

const std::map<int, std::pair<const char*, Outcome (*)()>> kCriteria{
    {1, {"exact tail bounds on small models", criterion1}},
    {2, {"Delta_N below its total-variation bound", criterion2}},
    {3, {"Bernoulli Delta_N bound", criterion3}},
    {4, {"coverage of both exact-profile radii", criterion4}},
    {5, {"local dependence D_N and cross-block covariance", criterion5}},
    {6, {"study 1 error trend", criterion6}},
    {7, {"study 2 error trend and degree scaling", criterion7}},
    {8, {"theta* standard errors", criterion8}},
    {9, {"block subsampling", criterion9}},
    {10, {"randomised property suites", criterion10}},
};

bool run(int id) {
  const auto& [name, fn] = kCriteria.at(id);
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::printf("[%s] criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  bool ok = true;
  if (argc > 1) {
    const int id = std::atoi(argv[1]);
    if (!kCriteria.count(id)) {
      std::fprintf(stderr, "unknown criterion %s\n", argv[1]);
      return 1;
    }
    ok = run(id);
  } else {
    for (const auto& [id, entry] : kCriteria) ok = run(id) && ok;
  }
  return ok ? 0 : 1;
}

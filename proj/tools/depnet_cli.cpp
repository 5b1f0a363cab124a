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

// depnet command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "depnet/depnet.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitVerification = 2;

struct Failure {
  int code;
  std::string message;
};

void check(dn_status s, const char* what) {
  if (s != DN_OK)
    throw Failure{kExitValidation,
                  std::string(what) + ": " + dn_status_name(s) + ": " + dn_last_error()};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitValidation, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Failure{kExitValidation, "cannot write " + path.string()};
  out << text;
  if (!out) throw Failure{kExitValidation, "write failed for " + path.string()};
}

// Writes to `path` or, when empty, to stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

class Owned {
 public:
  explicit Owned(char* s = nullptr) : s_(s) {}
  ~Owned() { dn_string_free(s_); }
  Owned(const Owned&) = delete;
  Owned& operator=(const Owned&) = delete;
  char** out() { return &s_; }
  std::string str() const { return s_ ? s_ : ""; }

 private:
  char* s_;
};

template <class T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { Free(p_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &p_; }
  T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using Graph = Handle<dn_graph, dn_graph_free>;
using Model = Handle<dn_model, dn_model_free>;
using Report = Handle<dn_report, dn_report_free>;

std::string artifact(const Report& r, const char* name) {
  const char* text = dn_report_artifact(r.get(), name);
  return text ? text : "";
}

std::optional<double> value(const Report& r, const std::string& name) {
  double v = 0.0;
  if (dn_report_value(r.get(), name.c_str(), &v) != DN_OK) return std::nullopt;
  return v;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      grid.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw Failure{kExitValidation, "bad t-grid entry '" + cell + "'"};
    }
  }
  return grid;
}

std::vector<double> default_grid() {
  std::vector<double> grid;
  for (int i = 1; i <= 19; ++i) grid.push_back(0.05 * i);
  return grid;
}

// Writes every artifact of a report into `dir` as <prefix><name-suffix>.
void write_artifacts(const Report& r, const std::filesystem::path& dir, const std::string& prefix,
                     const std::vector<std::pair<const char*, const char*>>& names) {
  for (const auto& [name, file] : names) {
    const char* text = dn_report_artifact(r.get(), name);
    if (text == nullptr) continue;
    const auto path = dir / (prefix + file);
    write_file(path, text);
    std::cerr << "wrote " << path.string() << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Empirical graph-statistic distributions under edge dependence"};
  app.require_subcommand(1);
  app.fallthrough();

  std::optional<std::uint64_t> seed;
  std::string out;
  int threads = 1;
  std::string config_path;
  app.add_option("--seed", seed, "Master random seed");
  app.add_option("--out", out, "Output file (or directory for studies and generators)");
  app.add_option("--threads", threads, "Worker threads; 0 uses every hardware thread")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--config", config_path, "JSON configuration file");

  auto* simulate = app.add_subcommand("simulate", "Sample one graph from a model JSON");
  std::string model_path;
  simulate->add_option("--model", model_path, "Model JSON file")->required();

  auto* stats = app.add_subcommand("stats", "Empirical distribution of an edge-list graph");
  std::string graph_path, kind = "degree", respondents_path;
  stats->add_option("--graph", graph_path, "Edge-list file")->required();
  stats->add_option("--kind", kind,
                    "degree|out_degree|in_degree|esp|geodesic|within_block_out_degree");
  stats->add_option("--respondents", respondents_path, "Node list (within-block kind)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate a bound from a JSON record");
  std::string input_path;
  bounds->add_option("--input", input_path, "Bound input JSON (defaults to --config)");

  auto* oracle = app.add_subcommand("oracle", "Exact tail-bound verification by enumeration");
  std::string grid_text, support, profile_path;
  oracle->add_option("--model", model_path, "Model JSON file")->required();
  oracle->add_option("--kind", kind, "Statistic kind");
  oracle->add_option("--t-grid", grid_text, "Comma-separated thresholds (default 0.05..0.95)");
  oracle->add_option("--support", support, "Support restriction: all, edges=m, degree=lo..hi");
  oracle->add_option("--profile-out", profile_path, "Also write the dependence profile CSV");

  auto* study1 = app.add_subcommand("study1", "Curved ERGM simulation study");
  auto* study2 = app.add_subcommand("study2", "Beta-model simulation study");

  auto* gen = app.add_subcommand("gen-classes", "Generate a synthetic class network");
  int block_count = 304, size_low = 15, size_high = 33;
  double response = 0.87;
  gen->add_option("--blocks", block_count, "Number of classes");
  gen->add_option("--size-low", size_low, "Smallest class size");
  gen->add_option("--size-high", size_high, "Largest class size");
  gen->add_option("--response-rate", response, "Median response rate");

  auto* subsample = app.add_subcommand("subsample", "Block subsampling errors");
  std::string network_path;
  subsample->add_option("--network", network_path, "Edge list with blocks")->required();
  subsample->add_option("--respondents", respondents_path, "Respondent node list");

  auto* plot = app.add_subcommand("plot", "Boxplot SVG from a CSV table");
  std::string csv_path, group_col, value_col = "linf_error", title;
  std::vector<std::string> filters;
  plot->add_option("--csv", csv_path, "Input CSV")->required();
  plot->add_option("--group", group_col, "Grouping column")->required();
  plot->add_option("--value", value_col, "Value column");
  plot->add_option("--filter", filters, "column=value condition (repeatable)");
  plot->add_option("--title", title, "Plot title");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitValidation;
  }

  const std::uint64_t* seed_ptr = seed ? &*seed : nullptr;
  const std::uint64_t master = seed.value_or(1);
  try {
    const std::string config = config_path.empty() ? std::string() : read_file(config_path);
    const char* config_c = config.empty() ? nullptr : config.c_str();
    if (simulate->parsed()) {
      Model m;
      check(dn_model_from_json(read_file(model_path).c_str(), m.out()), "model");
      Graph g;
      check(dn_model_sample(m.get(), master, g.out()), "simulate");
      Owned text;
      check(dn_graph_serialize(g.get(), text.out()), "serialize");
      emit(out, text.str());
    } else if (stats->parsed()) {
      Graph g;
      check(dn_graph_parse(read_file(graph_path).c_str(), g.out()), graph_path.c_str());
      const std::string resp = respondents_path.empty() ? "" : read_file(respondents_path);
      Owned csv;
      check(dn_distribution_csv(g.get(), kind.c_str(), respondents_path.empty() ? nullptr : resp.c_str(),
                                csv.out()),
            "stats");
      emit(out, csv.str());
    } else if (bounds->parsed()) {
      const std::string input = input_path.empty() ? config : read_file(input_path);
      if (input.empty()) throw Failure{kExitValidation, "bounds needs --input or --config"};
      Report r;
      check(dn_bounds(input.c_str(), r.out()), "bounds");
      emit(out, artifact(r, "report.json") + "\n");
      std::cout << artifact(r, "summary.txt");
    } else if (oracle->parsed()) {
      Model m;
      check(dn_model_from_json(read_file(model_path).c_str(), m.out()), "model");
      const auto grid = grid_text.empty() ? default_grid() : parse_grid(grid_text);
      Report r;
      check(dn_oracle_verify(m.get(), kind.c_str(), grid.data(), grid.size(),
                             support.empty() ? nullptr : support.c_str(), r.out()),
            "oracle");
      emit(out, artifact(r, "lemma.csv"));
      if (!profile_path.empty()) write_file(profile_path, artifact(r, "profile.csv"));
      const double violations = value(r, "violations").value_or(0.0);
      if (value(r, "negative_conc2").value_or(0.0) != 0.0)
        std::cerr << "note: 1 + min{C_N, Delta_N} < 0, the covariance bound is negative\n";
      if (violations > 0) {
        std::cerr << "verification failed: " << violations << " bound violation(s)\n";
        return kExitVerification;
      }
      std::cerr << "verified: no violations on " << grid.size() << " thresholds\n";
    } else if (study1->parsed() || study2->parsed()) {
      const bool first = study1->parsed();
      Report r;
      check(first ? dn_study1(config_c, seed_ptr, threads, r.out())
                  : dn_study2(config_c, seed_ptr, threads, r.out()),
            first ? "study1" : "study2");
      const std::string prefix = first ? "study1" : "study2";
      write_artifacts(r, out.empty() ? "." : out, prefix,
                      {{"rows.csv", ".csv"},
                       {"theta_star.csv", "_theta_star.csv"},
                       {"meta.json", "_meta.json"},
                       {"expected_degree.csv", "_expected_degree.csv"}});
      for (const char* a : {"0", "0.25", "0.5"}) {
        if (auto s = value(r, std::string("slope_alpha=") + a))
          std::cout << "alpha=" << a << ": log-log slope of mean max expected degree = " << *s
                    << "\n";
      }
    } else if (gen->parsed()) {
      Report r;
      check(dn_generate_classes(block_count, size_low, size_high, response, master, r.out()),
            "gen-classes");
      write_artifacts(r, out.empty() ? "." : out, "",
                      {{"network.txt", "classes.txt"}, {"respondents.txt", "respondents.txt"}});
    } else if (subsample->parsed()) {
      Graph g;
      check(dn_graph_parse(read_file(network_path).c_str(), g.out()), network_path.c_str());
      const std::string resp = respondents_path.empty() ? "" : read_file(respondents_path);
      Report r;
      check(dn_subsample(g.get(), respondents_path.empty() ? nullptr : resp.c_str(), config_c,
                         seed_ptr, threads, r.out()),
            "subsample");
      write_artifacts(r, out.empty() ? "." : out, "subsample",
                      {{"rows.csv", ".csv"},
                       {"bins.csv", "_bins.csv"},
                       {"reference.csv", "_reference.csv"}});
    } else if (plot->parsed()) {
      std::string joined;
      for (const auto& f : filters) joined += (joined.empty() ? "" : ",") + f;
      Owned svg;
      check(dn_plot_svg(read_file(csv_path).c_str(), group_col.c_str(), value_col.c_str(),
                        joined.c_str(), title.c_str(), svg.out()),
            "plot");
      emit(out, svg.str());
    }
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << "\n";
    return f.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitOk;
}

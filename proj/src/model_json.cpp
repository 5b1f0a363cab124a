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

#include "depnet/model_json.hpp"

#include <json.hpp>

#include "depnet/error.hpp"

namespace depnet {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::kParse, "model JSON: " + what); }

const json& field(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::vector<double> read_matrix(const json& j, int n) {
  if (!j.is_array() || static_cast<int>(j.size()) != n) bad("probability matrix must have n rows");
  std::vector<double> out(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    const json& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != n)
      bad("probability matrix must have n columns");
    for (int k = 0; k < n; ++k) out[i * n + k] = row[k].get<double>();
  }
  return out;
}

std::vector<double> read_probs(const json& j, const char* key, int n) {
  const json& v = field(j, key);
  if (v.is_number()) {
    std::vector<double> out(static_cast<std::size_t>(n) * n, v.get<double>());
    for (int i = 0; i < n; ++i) out[i * n + i] = 0.0;
    return out;
  }
  return read_matrix(v, n);
}

json matrix_json(const std::vector<double>& probs, int n) {
  json rows = json::array();
  for (int i = 0; i < n; ++i) {
    json row = json::array();
    for (int k = 0; k < n; ++k) row.push_back(probs[i * n + k]);
    rows.push_back(std::move(row));
  }
  return rows;
}

ModelSpec from(const json& j) {
  if (!j.is_object()) bad("expected an object");
  const std::string variant = field(j, "variant").get<std::string>();
  if (variant == "bernoulli") {
    const int n = field(j, "n").get<int>();
    const bool directed = j.value("directed", false);
    require(n >= 1, "n must be at least 1");
    const char* key = j.contains("probs") ? "probs" : "p";
    return bernoulli_model(read_probs(j, key, n), n, directed);
  }
  if (variant == "beta") return beta_model(field(j, "theta").get<std::vector<double>>());
  if (variant == "curved_ergm") {
    CurvedErgm c;
    c.theta1 = field(j, "theta1").get<double>();
    c.theta2 = field(j, "theta2").get<double>();
    c.theta3 = field(j, "theta3").get<double>();
    c.convention = parse_convention(j.value("eta_convention", std::string("as_printed")));
    const int n = field(j, "n").get<int>();
    if (j.contains("burn_in") || j.contains("thin")) {
      McmcSchedule s = default_schedule(n);
      s.burn_in = j.value("burn_in", s.burn_in);
      s.thin = j.value("thin", s.thin);
      c.schedule = s;
    }
    return curved_ergm(n, c);
  }
  if (variant == "local_dependence") {
    const bool directed = j.value("directed", false);
    auto ids = field(j, "blocks").get<std::vector<int>>();
    for (int& b : ids) {
      if (b < 1) bad("block ids are 1-based");
      --b;
    }
    BlockStructure blocks(std::move(ids));
    const int n = blocks.node_count();
    std::vector<ModelSpec> within;
    for (const json& w : field(j, "within")) within.push_back(from(w));
    BernoulliModel between{j.contains("between") ? read_probs(j, "between", n)
                                                 : std::vector<double>(std::size_t(n) * n, 0.0)};
    return local_dependence(std::move(blocks), std::move(within), std::move(between), directed);
  }
  bad("unknown variant '" + variant + "'");
}

json to(const ModelSpec& spec) {
  json j;
  if (auto* b = std::get_if<BernoulliModel>(&spec.model)) {
    j = {{"variant", "bernoulli"},
         {"n", spec.n},
         {"directed", spec.directed},
         {"probs", matrix_json(b->probs, spec.n)}};
  } else if (auto* b = std::get_if<BetaModel>(&spec.model)) {
    j = {{"variant", "beta"}, {"theta", b->theta}};
  } else if (auto* c = std::get_if<CurvedErgm>(&spec.model)) {
    j = {{"variant", "curved_ergm"},        {"n", spec.n},
         {"theta1", c->theta1},             {"theta2", c->theta2},
         {"theta3", c->theta3},             {"eta_convention", convention_name(c->convention)}};
    if (c->schedule) {
      j["burn_in"] = c->schedule->burn_in;
      j["thin"] = c->schedule->thin;
    }
  } else {
    const auto& ld = std::get<LocalDependence>(spec.model);
    std::vector<int> ids = ld.blocks.assignment();
    for (int& b : ids) ++b;
    json within = json::array();
    for (const auto& w : ld.within) within.push_back(to(w));
    j = {{"variant", "local_dependence"},
         {"directed", spec.directed},
         {"blocks", ids},
         {"within", within},
         {"between", matrix_json(ld.between.probs, spec.n)}};
  }
  return j;
}

}  // namespace

ModelSpec model_from_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    bad(e.what());
  }
  try {
    ModelSpec spec = from(j);
    validate(spec);
    return spec;
  } catch (const json::exception& e) {
    bad(e.what());
  }
}

std::string model_to_json(const ModelSpec& spec) { return to(spec).dump(); }

}  // namespace depnet

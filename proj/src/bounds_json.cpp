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

#include "depnet/bounds_json.hpp"

#include <json.hpp>

#include "depnet/error.hpp"
#include "depnet/model_json.hpp"
#include "depnet/oracle.hpp"

namespace depnet {

namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || !it->is_number())
    fail(ErrorCode::kInvalidArgument, std::string("bounds input needs numeric '") + key + "'");
  return it->get<double>();
}

long long integer(const json& j, const char* key) {
  const double v = number(j, key);
  if (v != static_cast<double>(static_cast<long long>(v)))
    fail(ErrorCode::kInvalidArgument, std::string("'") + key + "' must be an integer");
  return static_cast<long long>(v);
}

BoundReport single(const json& j) {
  const BoundId id = parse_bound(j.at("bound").get<std::string>());
  switch (id) {
    case BoundId::kThm1Exp:
      return thm1_exp_radius(number(j, "D_N"), integer(j, "M"), integer(j, "p"));
    case BoundId::kThm1Cheb:
      return thm1_cheb_radius(number(j, "C_N"), number(j, "Delta_N"), integer(j, "M"),
                              number(j, "alpha"));
    case BoundId::kThm2:
      return thm2_radius(number(j, "D_N"), integer(j, "M"), integer(j, "p"), number(j, "r_N"));
    case BoundId::kCor1:
      return cor1_radius(number(j, "M_max"), number(j, "alpha_max"), integer(j, "N"));
    case BoundId::kCor2:
      return cor2_radius(number(j, "M_max"), number(j, "alpha_max"), integer(j, "N"),
                         number(j, "beta"));
    case BoundId::kCorBern: {
      const auto deg = j.at("expected_degrees").get<std::vector<double>>();
      const long long n = j.contains("N") ? integer(j, "N") : static_cast<long long>(deg.size());
      return cor_bern_bound(deg, n, number(j, "alpha"));
    }
  }
  fail(ErrorCode::kInvalidArgument, "unknown bound");
}

std::vector<BoundReport> from_model(const json& j) {
  const ModelSpec spec = model_from_json(j.at("model").dump());
  const StatisticKind kind = parse_kind(j.value("kind", std::string("degree")));
  const double alpha = number(j, "alpha");
  const ExactDistribution dist = exact_distribution(spec);
  const DependenceProfile prof = compute_dependence_profile(dist, kind);
  std::vector<BoundReport> out;
  out.push_back(thm1_exp_radius(prof.d_n, prof.basis_count, prof.bins - 1));
  out.push_back(thm1_cheb_radius(prof.c_n, prof.delta_n.value_or(prof.c_n), prof.basis_count,
                                 alpha));
  if (std::holds_alternative<BernoulliModel>(spec.model) ||
      std::holds_alternative<BetaModel>(spec.model)) {
    const auto deg = expected_degrees(edge_probabilities(spec), spec.n);
    out.push_back(cor_bern_bound(deg, spec.n, alpha));
  }
  return out;
}

json to_json(const BoundReport& r) {
  json j = {{"bound_id", bound_name(r.id)},
            {"epsilon", r.radius},
            {"confidence", r.confidence},
            {"vacuous", r.vacuous},
            {"inputs", r.inputs}};
  if (r.id == BoundId::kCorBern) j["delta_bound"] = r.delta_bound;
  return j;
}

}  // namespace

std::vector<BoundReport> evaluate_bounds_json(std::string_view text) {
  try {
    const json j = json::parse(text);
    if (!j.is_object()) fail(ErrorCode::kParse, "bounds input must be a JSON object");
    if (j.contains("model")) return from_model(j);
    return {single(j)};
  } catch (const json::exception& e) {
    fail(ErrorCode::kParse, std::string("bounds input: ") + e.what());
  }
}

std::string bound_report_json(const BoundReport& report) { return to_json(report).dump(2); }

std::string bound_reports_json(const std::vector<BoundReport>& reports) {
  if (reports.size() == 1) return bound_report_json(reports.front());
  json arr = json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2);
}

}  // namespace depnet

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

#include <string>
#include <string_view>
#include <vector>

#include "depnet/bounds.hpp"

namespace depnet {

// Evaluates the bound(s) described by a JSON record. Either a single bound:
//
//   {"bound": "Thm1-exp",  "D_N": 1, "M": 100, "p": 99}
//   {"bound": "Thm1-cheb", "C_N": 0, "Delta_N": 0, "M": 100, "alpha": 0.05}
//   {"bound": "Thm2",      "D_N": 1, "M": 100, "p": 99, "r_N": 0.02}
//   {"bound": "Cor1",      "M_max": 0, "alpha_max": 0, "N": 100}
//   {"bound": "Cor2",      "M_max": 0, "alpha_max": 0, "N": 100, "beta": 0.5}
//   {"bound": "CorBern",   "expected_degrees": [1.5, 1.5, 1.5, 1.5], "alpha": 0.05}
//
// or an enumerable model whose exact dependence profile feeds both
// Thm1-exp and Thm1-cheb radii (plus CorBern for independent-edge models):
//
//   {"model": {...}, "kind": "degree", "alpha": 0.05}
std::vector<BoundReport> evaluate_bounds_json(std::string_view text);

std::string bound_report_json(const BoundReport& report);
// Single report as an object, several as an array.
std::string bound_reports_json(const std::vector<BoundReport>& reports);

}  // namespace depnet

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

#include "depnet/models.hpp"

namespace depnet {

// JSON form of a ModelSpec, discriminated by "variant":
//
//   {"variant": "bernoulli", "n": 4, "directed": false, "p": 0.5}
//   {"variant": "bernoulli", "n": 3, "directed": true, "probs": [[...], ...]}
//   {"variant": "beta", "theta": [0.5, -0.5, 0.2, 0.0]}
//   {"variant": "curved_ergm", "n": 25, "theta1": -3.5, "theta2": 0.4,
//    "theta3": 0.75, "eta_convention": "as_printed", "burn_in": 62500,
//    "thin": 6250}
//   {"variant": "local_dependence", "directed": true, "blocks": [1, 1, 2, 2],
//    "within": [<spec>, <spec>], "between": 0.0}
//
// Block ids are 1-based. "between" is a scalar or an n x n matrix; entries
// for within-block pairs are ignored. "eta_convention" is "as_printed"
// (default) or "standard"; burn_in and thin are optional.
ModelSpec model_from_json(std::string_view text);
std::string model_to_json(const ModelSpec& spec);

}  // namespace depnet

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

#include <map>
#include <span>
#include <string>
#include <string_view>

namespace depnet {

enum class BoundId { kThm1Exp, kThm1Cheb, kThm2, kCor1, kCor2, kCorBern };

std::string_view bound_name(BoundId id);
BoundId parse_bound(std::string_view name);

// A high-probability statement ||F_hat - theta*||_inf < radius holding with
// probability at least `confidence`. Confidence is never clamped; `vacuous`
// flags confidence <= 0.
struct BoundReport {
  BoundId id = BoundId::kThm1Exp;
  double radius = 0.0;
  double confidence = 0.0;
  bool vacuous = false;
  std::map<std::string, double> inputs;
  // Only CorBern: (2/N) sum_i E d_i.
  double delta_bound = 0.0;

  std::string summary() const;
};

// Natural logarithms throughout.
BoundReport thm1_exp_radius(double d_n, long long m, long long p);
BoundReport thm1_cheb_radius(double c_n, double delta_n, long long m, double alpha);
// Throws kPrecondition when r_n > sqrt(D log max{M, 1 + p} / M).
BoundReport thm2_radius(double d_n_x0, long long m, long long p, double r_n);
BoundReport cor1_radius(double m_max, double alpha_max, long long n);
BoundReport cor2_radius(double m_max, double alpha_max, long long n, double beta);
BoundReport cor_bern_bound(std::span<const double> expected_degrees, long long n, double alpha);

}  // namespace depnet

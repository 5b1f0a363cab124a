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

#include "depnet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "depnet/error.hpp"

namespace depnet {

namespace {

constexpr double kRootThreeHalves = 1.2247448713915890491;       // sqrt(3/2)
constexpr double kRootTwentySevenHalves = 3.6742346141747671474;  // sqrt(27/2)

BoundReport make(BoundId id, double radius, double confidence) {
  BoundReport r;
  r.id = id;
  r.radius = radius;
  r.confidence = confidence;
  r.vacuous = confidence <= 0.0;
  return r;
}

double log_term(long long m, long long p) {
  require(m >= 1, "M must be at least 1");
  require(p >= 0, "p must be non-negative");
  const auto top = static_cast<double>(std::max(m, 1 + p));
  require(top >= 2.0, "max{M, 1 + p} must be at least 2");
  return top;
}

void check_alpha(double alpha) {
  require(alpha > 0.0 && alpha < 1.0, "alpha must lie in (0, 1)");
}

}  // namespace

std::string_view bound_name(BoundId id) {
  switch (id) {
    case BoundId::kThm1Exp:
      return "Thm1-exp";
    case BoundId::kThm1Cheb:
      return "Thm1-cheb";
    case BoundId::kThm2:
      return "Thm2";
    case BoundId::kCor1:
      return "Cor1";
    case BoundId::kCor2:
      return "Cor2";
    case BoundId::kCorBern:
      return "CorBern";
  }
  return "?";
}

BoundId parse_bound(std::string_view name) {
  for (BoundId id : {BoundId::kThm1Exp, BoundId::kThm1Cheb, BoundId::kThm2, BoundId::kCor1,
                     BoundId::kCor2, BoundId::kCorBern}) {
    if (bound_name(id) == name) return id;
  }
  fail(ErrorCode::kInvalidArgument, "unknown bound '" + std::string(name) + "'");
}

std::string BoundReport::summary() const {
  char buf[160];
  std::snprintf(buf, sizeof buf, "%s: epsilon = %.6g, confidence = %.6g%s",
                std::string(bound_name(id)).c_str(), radius, confidence,
                vacuous ? " (vacuous)" : "");
  return buf;
}

BoundReport thm1_exp_radius(double d_n, long long m, long long p) {
  require(d_n >= 0.0, "D_N must be non-negative");
  const double top = log_term(m, p);
  auto r = make(BoundId::kThm1Exp, kRootThreeHalves * std::sqrt(d_n * std::log(top) / m),
                1.0 - 2.0 / (top * top));
  r.inputs = {{"D_N", d_n}, {"M", double(m)}, {"p", double(p)}};
  return r;
}

BoundReport thm1_cheb_radius(double c_n, double delta_n, long long m, double alpha) {
  check_alpha(alpha);
  require(m >= 1, "M must be at least 1");
  const double dep = std::min(std::fabs(c_n), std::fabs(delta_n));
  auto r = make(BoundId::kThm1Cheb, std::sqrt((1.0 + dep) / (alpha * m)), 1.0 - alpha);
  r.inputs = {{"C_N", c_n}, {"Delta_N", delta_n}, {"M", double(m)}, {"alpha", alpha}};
  return r;
}

BoundReport thm2_radius(double d_n_x0, long long m, long long p, double r_n) {
  require(d_n_x0 >= 0.0, "D_N(X0) must be non-negative");
  require(r_n > 0.0 && r_n < 1.0, "r(N) must lie in (0, 1)");
  const double top = log_term(m, p);
  const double base = std::sqrt(d_n_x0 * std::log(top) / m);
  if (r_n > base) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "r(N) = %.6g exceeds sqrt(D_N(X0) log max{M, 1+p} / M) = %.6g",
                  r_n, base);
    fail(ErrorCode::kPrecondition, buf);
  }
  auto r = make(BoundId::kThm2, kRootTwentySevenHalves * base, 1.0 - r_n - 4.0 / (top * top));
  r.inputs = {{"D_N", d_n_x0}, {"M", double(m)}, {"p", double(p)}, {"r_N", r_n}};
  return r;
}

BoundReport cor1_radius(double m_max, double alpha_max, long long n) {
  require(n >= 3, "N must be at least 3");
  require(m_max >= 0.0 && alpha_max >= 0.0, "M_max and alpha_max must be non-negative");
  const double nn = static_cast<double>(n);
  auto r = make(BoundId::kCor1,
                (1.0 + m_max + alpha_max) * kRootThreeHalves * std::sqrt(std::log(nn) / nn),
                1.0 - 6.0 / (nn * nn));
  r.inputs = {{"M_max", m_max}, {"alpha_max", alpha_max}, {"N", nn}};
  return r;
}

BoundReport cor2_radius(double m_max, double alpha_max, long long n, double beta) {
  require(n >= 3, "N must be at least 3");
  require(beta > 0.0, "beta must be positive");
  require(m_max >= 0.0 && alpha_max >= 0.0, "M_max and alpha_max must be non-negative");
  const double nn = static_cast<double>(n);
  auto r = make(BoundId::kCor2,
                (1.0 + m_max + alpha_max) * kRootThreeHalves *
                    std::sqrt(std::log(nn) / std::pow(nn, beta)),
                1.0 - 11.0 / (nn * nn));
  r.inputs = {{"M_max", m_max}, {"alpha_max", alpha_max}, {"N", nn}, {"beta", beta}};
  return r;
}

BoundReport cor_bern_bound(std::span<const double> expected_degrees, long long n, double alpha) {
  check_alpha(alpha);
  require(n >= 1, "N must be at least 1");
  require(expected_degrees.size() == static_cast<std::size_t>(n),
          "expected degree vector must have length N");
  for (double d : expected_degrees) require(d >= 0.0, "expected degrees must be non-negative");
  const double nn = static_cast<double>(n);
  const double bound =
      2.0 / nn * std::accumulate(expected_degrees.begin(), expected_degrees.end(), 0.0);
  auto r = make(BoundId::kCorBern, std::sqrt((1.0 + bound) / (alpha * nn)), 1.0 - alpha);
  r.delta_bound = bound;
  r.inputs = {{"N", nn}, {"alpha", alpha}, {"Delta_bound", bound}};
  return r;
}

}  // namespace depnet

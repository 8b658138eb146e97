// Copyright 2026 The qkr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qkr/lambert_w.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace qkr {
namespace {

constexpr double kBranchPoint = -1.0 / std::numbers::e;
constexpr double kEps = std::numeric_limits<double>::epsilon();

// Puiseux series about the branch point in p = +-sqrt(2(e x + 1)); the sign
// of p selects the branch.
double branch_point_series(double p) {
  return -1.0 +
         p * (1.0 +
              p * (-1.0 / 3.0 +
                   p * (11.0 / 72.0 +
                        p * (-43.0 / 540.0 +
                             p * (769.0 / 17280.0 + p * (-221.0 / 8505.0))))));
}

double branch_point_distance(double x) {
  // e x + 1 suffers cancellation near the branch point; fma keeps the
  // product exact before the add.
  const double d = std::fma(std::numbers::e, x, 1.0);
  return std::sqrt(2.0 * std::max(d, 0.0));
}

double initial_guess(LambertBranch branch, double x) {
  if (branch == LambertBranch::kPrincipal) {
    if (x < -0.3) return branch_point_series(branch_point_distance(x));
    if (x < 0.3) return x * (1.0 - x * (1.0 - 1.5 * x));
    if (x < std::numbers::e) return std::log1p(x) * 0.8;
    const double l1 = std::log(x);
    const double l2 = std::log(l1);
    return l1 - l2 + l2 / l1;
  }
  if (x < -0.25) return branch_point_series(-branch_point_distance(x));
  const double l1 = std::log(-x);
  const double l2 = std::log(-l1);
  return l1 - l2 + l2 / l1;
}

double halley(double w, double x) {
  for (int iter = 0; iter < 100; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    if (f == 0.0) break;
    const double wp1 = w + 1.0;
    if (wp1 == 0.0) break;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    w -= step;
    if (std::abs(step) < 1e-14 * std::abs(w)) break;
  }
  return w;
}

}  // namespace

std::optional<double> lambert_w(LambertBranch branch, double x) {
  if (std::isnan(x)) return std::nullopt;
  if (branch == LambertBranch::kMinusOne && x >= 0.0) {
    throw std::domain_error("W-1 is only real on [-1/e, 0)");
  }
  // A few ulps of slack so that a computed -1/e is not rejected.
  if (x < kBranchPoint * (1.0 + 4.0 * kEps)) return std::nullopt;
  if (x <= kBranchPoint) return -1.0;
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return x;

  const double p = branch_point_distance(x);
  if (p < 1e-3) {
    // Series truncation error ~p^7 is below double resolution here, and
    // Halley stalls because the derivative vanishes at the branch point.
    return branch_point_series(branch == LambertBranch::kPrincipal ? p : -p);
  }

  double w = halley(initial_guess(branch, x), x);
  if (branch == LambertBranch::kPrincipal) {
    w = std::max(w, -1.0);
  } else {
    w = std::min(w, -1.0);
  }
  return w;
}

}  // namespace qkr

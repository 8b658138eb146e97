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

#include "qkr/feasibility.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qkr/model.hpp"

namespace qkr {

double family_coefficient(double budget_usd, double years, int key_bits,
                          double depth) {
  if (!(budget_usd > 0.0) || !(years > 0.0) || key_bits < 1 ||
      !(depth > 0.0)) {
    throw std::invalid_argument(
        "feasibility family needs positive budget, years, key bits and depth");
  }
  constexpr double kPi = std::numbers::pi;
  return 16.0 * budget_usd /
         (kPi * kPi * std::ldexp(1.0, key_bits) * years * depth * depth);
}

FeasibilityFamily::FeasibilityFamily(double budget_usd, double years,
                                     int key_bits, std::uint64_t depth)
    : budget_usd_(budget_usd), years_(years), key_bits_(key_bits),
      depth_(depth),
      alpha_(family_coefficient(budget_usd, years, key_bits,
                                static_cast<double>(depth))) {}

double FeasibilityFamily::max_ccy_at_speed(double gate_hz) const {
  if (!(gate_hz > 0.0)) {
    throw std::invalid_argument("gate speed must be > 0");
  }
  const double total_layers = gate_hz * years_ * kSecondsPerYear;
  return alpha_ * total_layers * total_layers;
}

bool FeasibilityFamily::contains(double gate_hz, double ccy_cost_usd) const {
  return ccy_cost_usd <= max_ccy_at_speed(gate_hz);
}

RequiredSpeed required_speed(double alpha, double ccy_target, double years) {
  if (!(alpha > 0.0) || !(ccy_target > 0.0) || !(years > 0.0)) {
    throw std::invalid_argument(
        "required speed needs positive alpha, CCY target and years");
  }
  const double total_layers = std::sqrt(ccy_target / alpha);
  return {total_layers, total_layers / (years * kSecondsPerYear)};
}

std::vector<TradeoffPoint> tradeoff_curve(const FeasibilityFamily& family,
                                          double lo_hz, double hi_hz,
                                          int points) {
  if (!(lo_hz > 0.0 && lo_hz < hi_hz)) {
    throw std::invalid_argument("speed range must satisfy 0 < lo < hi");
  }
  if (points < 2) {
    throw std::invalid_argument("tradeoff curve needs at least 2 points");
  }
  std::vector<TradeoffPoint> curve;
  curve.reserve(static_cast<std::size_t>(points));
  const double log_lo = std::log(lo_hz);
  const double step = (std::log(hi_hz) - log_lo) / (points - 1);
  for (int i = 0; i < points; ++i) {
    double hz = std::exp(log_lo + step * i);
    if (i == 0) hz = lo_hz;
    if (i == points - 1) hz = hi_hz;
    curve.push_back({hz, family.max_ccy_at_speed(hz)});
  }
  return curve;
}

}  // namespace qkr

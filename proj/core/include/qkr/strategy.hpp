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

// Reward functions, attacker profit and the profit-maximizing strategy.
//
// Below the sequential time the cheapest attack costs Lambda / T, so with a
// discounted reward v delta^T the profit P(T) = v delta^T - Lambda / T has
// stationary points where delta^T T^2 = Lambda / (v ln(1/delta)). Writing
// c for the right-hand side, those are
//
//   T* = 2 W(sqrt(c) ln(delta) / 2) / ln(delta)
//
// on both real branches of Lambert W. The optimum is the best of: not
// attacking, the boundary min(T_seq, horizon), and any T* inside it.

#pragma once

#include <optional>

#include "qkr/model.hpp"

namespace qkr {

/// Cost as a function of attack time: Lambda / min(T, T_seq).
struct CostCurve {
  double lambda;                         // USD * years
  double sequential_years = kInfinity;   // T_seq, beyond which cost is flat

  static CostCurve of(const CipherSpec& cipher,
                      const QuantumScenario& scenario);

  /// Throws std::invalid_argument unless years > 0.
  double cost(double years) const;
};

/// R(T, v0). Pays the full (threshold) or discounted (delta) value at
/// T == horizon exactly. `value_override` replaces the model's v0.
double reward(const RewardModel& model, double years,
              std::optional<double> value_override = std::nullopt);

/// P(T) = R(T) - C(T); exactly 0 for T == 0 (no attack).
double profit(const CipherSpec& cipher, const QuantumScenario& scenario,
              const RewardModel& model, double years);

double profit(const CostCurve& curve, const RewardModel& model, double years);

/// Interior stationary points of v delta^T - Lambda / T from both Lambert W
/// branches, unfiltered. Empty when delta == 1, value == 0 or no real
/// solution exists.
struct StationaryPoints {
  std::optional<double> principal;
  std::optional<double> minus_one;
};
StationaryPoints stationary_points(double lambda, double value, double delta);

/// Profit-maximizing strategy. NoAttack wins ties (profit <= 0).
ProfitOutcome optimal_attack(const CipherSpec& cipher,
                             const QuantumScenario& scenario,
                             const RewardModel& model);

ProfitOutcome optimal_attack(const CostCurve& curve, const RewardModel& model);

/// Smallest v0 for which attacking in exactly `years` breaks even when a
/// fraction `remaining_fraction` = delta^years of the value survives:
/// cost(years) / remaining_fraction.
double min_profitable_value(const CipherSpec& cipher,
                            const QuantumScenario& scenario, double years,
                            double remaining_fraction);

/// delta recovered from the remaining fraction delta^years.
double delta_from_remaining(double remaining_fraction, double years);

}  // namespace qkr

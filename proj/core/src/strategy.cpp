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

#include "qkr/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "qkr/cost.hpp"
#include "qkr/lambert_w.hpp"

namespace qkr {

CostCurve CostCurve::of(const CipherSpec& cipher,
                        const QuantumScenario& scenario) {
  return CostCurve{cost_time_product(cipher, scenario),
                   sequential_time(cipher, scenario)};
}

double CostCurve::cost(double years) const {
  if (!(years > 0.0)) {
    throw std::invalid_argument("attack time must be > 0 years");
  }
  return lambda / std::min(years, sequential_years);
}

double reward(const RewardModel& model, double years,
              std::optional<double> value_override) {
  if (!(years >= 0.0)) {
    throw std::invalid_argument("reward time must be >= 0");
  }
  validate(model);
  return std::visit(
      [&](const auto& m) -> double {
        using M = std::decay_t<decltype(m)>;
        const double v = value_override.value_or(m.value_usd);
        if constexpr (std::is_same_v<M, ConstantReward>) {
          return v;
        } else if constexpr (std::is_same_v<M, ThresholdReward>) {
          return years <= m.horizon_years ? v : 0.0;
        } else {
          return years <= m.horizon_years ? v * std::pow(m.delta, years) : 0.0;
        }
      },
      model);
}

double profit(const CostCurve& curve, const RewardModel& model, double years) {
  if (years == 0.0) return 0.0;
  return reward(model, years) - curve.cost(years);
}

double profit(const CipherSpec& cipher, const QuantumScenario& scenario,
              const RewardModel& model, double years) {
  if (years == 0.0) return 0.0;
  return reward(model, years) - attack_plan(cipher, scenario, years).cost_usd;
}

StationaryPoints stationary_points(double lambda, double value, double delta) {
  StationaryPoints points;
  if (!(lambda > 0.0) || !(value > 0.0) || !(delta > 0.0 && delta < 1.0)) {
    return points;
  }
  const double log_delta = std::log(delta);
  const double c = lambda / (value * -log_delta);
  const double x = 0.5 * std::sqrt(c) * log_delta;
  const auto to_time = [&](std::optional<double> w) -> std::optional<double> {
    if (!w) return std::nullopt;
    return 2.0 * *w / log_delta;
  };
  points.principal = to_time(lambert_w(LambertBranch::kPrincipal, x));
  // x < 0 always here, so W-1 is in its domain whenever W0 is.
  points.minus_one = to_time(lambert_w(LambertBranch::kMinusOne, x));
  return points;
}

ProfitOutcome optimal_attack(const CostCurve& curve, const RewardModel& model) {
  validate(model);
  if (!(curve.lambda > 0.0) || !(curve.sequential_years > 0.0)) {
    throw std::invalid_argument("cost curve needs lambda > 0 and T_seq > 0");
  }

  double horizon = kInfinity;
  std::optional<double> delta;
  if (const auto* t = std::get_if<ThresholdReward>(&model)) {
    horizon = t->horizon_years;
  } else if (const auto* d = std::get_if<DeltaReward>(&model)) {
    horizon = d->horizon_years;
    delta = d->delta;
  }

  ProfitOutcome outcome;
  outcome.candidates.push_back({0.0, 0.0, CandidateKind::kNoAttack});

  const double boundary = std::min(curve.sequential_years, horizon);
  if (std::isfinite(boundary)) {
    const CandidateKind kind = curve.sequential_years <= horizon
                                   ? CandidateKind::kSequential
                                   : CandidateKind::kThresholdBoundary;
    outcome.candidates.push_back(
        {boundary, profit(curve, model, boundary), kind});
  }

  if (delta) {
    const StationaryPoints points =
        stationary_points(curve.lambda, initial_value(model), *delta);
    const auto consider = [&](std::optional<double> t, CandidateKind kind) {
      if (t && *t > 0.0 && *t <= boundary && std::isfinite(*t)) {
        outcome.candidates.push_back({*t, profit(curve, model, *t), kind});
      }
    };
    consider(points.principal, CandidateKind::kInteriorPrincipal);
    consider(points.minus_one, CandidateKind::kInteriorMinusOne);
  }

  for (const ProfitCandidate& c : outcome.candidates) {
    if (c.profit_usd > outcome.profit_usd) {
      outcome.profit_usd = c.profit_usd;
      outcome.attack_years = c.time_years;
    }
  }
  return outcome;
}

ProfitOutcome optimal_attack(const CipherSpec& cipher,
                             const QuantumScenario& scenario,
                             const RewardModel& model) {
  return optimal_attack(CostCurve::of(cipher, scenario), model);
}

double min_profitable_value(const CipherSpec& cipher,
                            const QuantumScenario& scenario, double years,
                            double remaining_fraction) {
  if (!(remaining_fraction > 0.0 && remaining_fraction <= 1.0)) {
    throw std::invalid_argument("remaining value fraction must lie in (0, 1]");
  }
  return attack_plan(cipher, scenario, years).cost_usd / remaining_fraction;
}

double delta_from_remaining(double remaining_fraction, double years) {
  if (!(remaining_fraction > 0.0 && remaining_fraction <= 1.0)) {
    throw std::invalid_argument("remaining value fraction must lie in (0, 1]");
  }
  if (!(years > 0.0)) {
    throw std::invalid_argument("attack time must be > 0 years");
  }
  return std::pow(remaining_fraction, 1.0 / years);
}

}  // namespace qkr

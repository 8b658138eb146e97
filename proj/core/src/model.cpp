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

#include "qkr/model.hpp"

#include <cmath>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace qkr {

CipherSpec::CipherSpec(std::string name, int key_bits, std::uint64_t depth,
                       std::uint64_t width)
    : name_(std::move(name)), key_bits_(key_bits), depth_(depth),
      width_(width) {
  if (key_bits_ < 1) {
    throw std::invalid_argument("cipher '" + name_ + "': key_bits must be >= 1");
  }
  if (depth_ < 1) {
    throw std::invalid_argument("cipher '" + name_ + "': depth must be >= 1");
  }
  if (width_ < 1) {
    throw std::invalid_argument("cipher '" + name_ + "': width must be >= 1");
  }
}

double CipherSpec::search_space() const { return std::ldexp(1.0, key_bits_); }

QuantumScenario::QuantumScenario(std::string name, double gate_speed_hz,
                                 double ccy_cost_usd)
    : name_(std::move(name)), gate_speed_hz_(gate_speed_hz),
      ccy_cost_usd_(ccy_cost_usd) {
  if (!(gate_speed_hz_ > 0.0) || !std::isfinite(gate_speed_hz_)) {
    throw std::invalid_argument("scenario '" + name_ +
                                "': gate_speed_hz must be > 0");
  }
  if (!(ccy_cost_usd_ > 0.0) || !std::isfinite(ccy_cost_usd_)) {
    throw std::invalid_argument("scenario '" + name_ +
                                "': ccy_cost_usd must be > 0");
  }
}

namespace {

void check_value(double v) {
  if (!(v >= 0.0) || !std::isfinite(v)) {
    throw std::invalid_argument("reward value must be finite and >= 0");
  }
}

void check_horizon(double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("reward horizon must be > 0");
  }
}

}  // namespace

void validate(const RewardModel& model) {
  std::visit(
      [](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        check_value(m.value_usd);
        if constexpr (std::is_same_v<M, ThresholdReward>) {
          check_horizon(m.horizon_years);
        } else if constexpr (std::is_same_v<M, DeltaReward>) {
          if (!(m.delta > 0.0 && m.delta <= 1.0)) {
            throw std::invalid_argument("delta must lie in (0, 1]");
          }
          check_horizon(m.horizon_years);
        }
      },
      model);
}

double initial_value(const RewardModel& model) {
  return std::visit([](const auto& m) { return m.value_usd; }, model);
}

const char* to_string(CandidateKind kind) {
  switch (kind) {
    case CandidateKind::kNoAttack:
      return "no-attack";
    case CandidateKind::kThresholdBoundary:
      return "boundary";
    case CandidateKind::kSequential:
      return "sequential";
    case CandidateKind::kInteriorPrincipal:
      return "interior-W0";
    case CandidateKind::kInteriorMinusOne:
      return "interior-W-1";
  }
  return "unknown";
}

double years_to_layers(double years, const QuantumScenario& scenario) {
  if (!(years > 0.0)) {
    throw std::invalid_argument("attack time must be > 0 years");
  }
  return years * scenario.gate_speed_hz() * kSecondsPerYear;
}

}  // namespace qkr

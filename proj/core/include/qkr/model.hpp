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

// Domain types shared by every part of the attack-economics model.
//
// Units used throughout the library:
//   time      years (wall clock)
//   speed     Hz (circuit layers advanced per second)
//   budget    layers (total circuit depth reachable within a deadline)
//   money     USD
//
// All magnitudes are carried in double precision. The largest quantity the
// model touches is 2^256 ~ 1.2e77, far from overflow.

#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qkr {

/// Seconds per year used for every layer-budget conversion. This is the
/// calibration constant behind the published cost tables, not 365.25 days.
inline constexpr double kSecondsPerYear = 3.154e7;

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Quantum-circuit view of an ideal cipher.
class CipherSpec {
 public:
  /// Throws std::invalid_argument unless key_bits, depth and width are >= 1.
  CipherSpec(std::string name, int key_bits, std::uint64_t depth,
             std::uint64_t width);

  const std::string& name() const { return name_; }
  int key_bits() const { return key_bits_; }
  /// Circuit layers per cipher evaluation.
  std::uint64_t depth() const { return depth_; }
  /// Qubits.
  std::uint64_t width() const { return width_; }
  /// N = 2^key_bits.
  double search_space() const;

  friend bool operator==(const CipherSpec&, const CipherSpec&) = default;

 private:
  std::string name_;
  int key_bits_;
  std::uint64_t depth_;
  std::uint64_t width_;
};

/// A calibrated future world: how fast a quantum computer advances circuit
/// layers and what renting one cipher circuit costs per year.
class QuantumScenario {
 public:
  /// Throws std::invalid_argument unless both rates are finite and > 0.
  QuantumScenario(std::string name, double gate_speed_hz, double ccy_cost_usd);

  const std::string& name() const { return name_; }
  double gate_speed_hz() const { return gate_speed_hz_; }
  /// Cost of one cipher circuit year (CCY).
  double ccy_cost_usd() const { return ccy_cost_usd_; }
  double layers_per_year() const { return gate_speed_hz_ * kSecondsPerYear; }

  friend bool operator==(const QuantumScenario&,
                         const QuantumScenario&) = default;

 private:
  std::string name_;
  double gate_speed_hz_;
  double ccy_cost_usd_;
};

// Time value of the encrypted information.

/// R(T) = v0 for every T.
struct ConstantReward {
  double value_usd;
};

/// R(T) = v0 while T <= horizon, 0 afterwards.
struct ThresholdReward {
  double value_usd;
  double horizon_years;
};

/// R(T) = v0 * delta^T while T <= horizon, 0 afterwards.
struct DeltaReward {
  double value_usd;
  double delta;
  double horizon_years = kInfinity;
};

using RewardModel = std::variant<ConstantReward, ThresholdReward, DeltaReward>;

/// Throws std::invalid_argument if the model violates v0 >= 0,
/// 0 < delta <= 1 or horizon > 0.
void validate(const RewardModel& model);

/// Initial value v0 of any reward model.
double initial_value(const RewardModel& model);

/// A fully resolved attack against one cipher under one scenario.
///
/// `deadline_years` is the requested completion time. When the deadline is
/// looser than the sequential (k = 1) attack, the attack simply finishes
/// early: `time_years` is the time actually rented, so cost_ccy stays
/// time_years * parallelism in every case.
struct AttackPlan {
  double deadline_years = 0.0;
  double time_years = 0.0;
  double layer_budget = 0.0;   // t, circuit layers within the deadline
  double oracle_calls = 0.0;   // t / d sequential queries per bucket
  double parallelism = 1.0;    // k, continuous
  double ceil_parallelism = 1.0;  // smallest integer >= k (stored as double)
  double cost_ccy = 0.0;
  double cost_usd = 0.0;
};

enum class CandidateKind {
  kNoAttack,
  kThresholdBoundary,   // finish exactly at the reward horizon
  kSequential,          // k = 1, limited by the sequential attack time
  kInteriorPrincipal,   // stationary point from the W0 branch
  kInteriorMinusOne,    // stationary point from the W-1 branch
};

const char* to_string(CandidateKind kind);

struct ProfitCandidate {
  double time_years;
  double profit_usd;
  CandidateKind kind;
};

/// The rational attacker's choice. `attack_years` is empty for NoAttack, in
/// which case profit_usd is exactly 0.
struct ProfitOutcome {
  std::optional<double> attack_years;
  double profit_usd = 0.0;
  std::vector<ProfitCandidate> candidates;

  bool attacks() const { return attack_years.has_value(); }
};

/// t = T_y * gate_speed_hz * kSecondsPerYear. Throws std::invalid_argument
/// unless years > 0.
double years_to_layers(double years, const QuantumScenario& scenario);

}  // namespace qkr

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

// Parallel Grover cost model.
//
// Splitting a search space of size N into k buckets, each bucket needs
// (pi/4) sqrt(N/k) sequential oracle calls. With a budget of t layers and an
// oracle of depth d, the attacker can afford t/d sequential calls, so
//
//   k >= pi^2 N / (16 (t/d)^2)
//
// and renting k circuits for T_y years costs T_y * k CCY.

#pragma once

#include "qkr/model.hpp"

namespace qkr {

/// k = max(1, pi^2 N / (16 (t/d)^2)). Throws std::invalid_argument unless
/// layer_budget > 0.
double required_parallelism(const CipherSpec& cipher, double layer_budget);

/// Same as above for an arbitrary (possibly non power of two) search space
/// and oracle depth.
double required_parallelism(double search_space, double depth,
                            double layer_budget);

/// Cheapest attack that finishes within `years`.
AttackPlan attack_plan(const CipherSpec& cipher,
                       const QuantumScenario& scenario, double years);

AttackPlan attack_plan(double search_space, double depth,
                       const QuantumScenario& scenario, double years);

/// Wall-clock years of the k = 1 attack: (pi/4) sqrt(N) d / s.
double sequential_time(const CipherSpec& cipher,
                       const QuantumScenario& scenario);

double sequential_time(double search_space, double depth,
                       const QuantumScenario& scenario);

/// Closed-form cost C(T) = C_CCY pi^2 N d^2 / (16 T s^2), s in layers/year.
/// Valid only while the required parallelism exceeds one.
double closed_form_cost(const CipherSpec& cipher,
                        const QuantumScenario& scenario, double years);

/// Lambda = C_CCY pi^2 N d^2 / (16 s^2): the cost-time product, constant
/// below the sequential time (cost = Lambda / T).
double cost_time_product(const CipherSpec& cipher,
                         const QuantumScenario& scenario);

double cost_time_product(double search_space, double depth,
                         const QuantumScenario& scenario);

/// Parallelism after shrinking the oracle depth by a factor beta in (0, 1]:
/// k' = beta^2 k. Not re-clamped to 1.
double depth_improvement_factor(double parallelism, double beta);

}  // namespace qkr

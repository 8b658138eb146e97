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

#include "qkr/cost.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qkr {
namespace {

constexpr double kPi = std::numbers::pi;

void check_search(double search_space, double depth) {
  if (!(search_space >= 1.0)) {
    throw std::invalid_argument("search space must be >= 1");
  }
  if (!(depth >= 1.0)) {
    throw std::invalid_argument("oracle depth must be >= 1");
  }
}

}  // namespace

double required_parallelism(double search_space, double depth,
                            double layer_budget) {
  check_search(search_space, depth);
  if (!(layer_budget > 0.0)) {
    throw std::invalid_argument("layer budget must be > 0");
  }
  const double calls = layer_budget / depth;
  const double k = kPi * kPi * search_space / (16.0 * calls * calls);
  return std::max(1.0, k);
}

double required_parallelism(const CipherSpec& cipher, double layer_budget) {
  return required_parallelism(cipher.search_space(),
                              static_cast<double>(cipher.depth()),
                              layer_budget);
}

double sequential_time(double search_space, double depth,
                       const QuantumScenario& scenario) {
  check_search(search_space, depth);
  return kPi / 4.0 * std::sqrt(search_space) * depth /
         scenario.layers_per_year();
}

double sequential_time(const CipherSpec& cipher,
                       const QuantumScenario& scenario) {
  return sequential_time(cipher.search_space(),
                         static_cast<double>(cipher.depth()), scenario);
}

AttackPlan attack_plan(double search_space, double depth,
                       const QuantumScenario& scenario, double years) {
  AttackPlan plan;
  plan.deadline_years = years;
  plan.layer_budget = years_to_layers(years, scenario);
  plan.oracle_calls = plan.layer_budget / depth;
  plan.parallelism = required_parallelism(search_space, depth,
                                          plan.layer_budget);
  plan.ceil_parallelism = std::ceil(plan.parallelism);
  plan.time_years = years;
  if (plan.parallelism == 1.0) {
    // A single circuit finishes after T_seq; renting it longer buys nothing.
    plan.time_years =
        std::min(years, sequential_time(search_space, depth, scenario));
  }
  plan.cost_ccy = plan.time_years * plan.parallelism;
  plan.cost_usd = plan.cost_ccy * scenario.ccy_cost_usd();
  return plan;
}

AttackPlan attack_plan(const CipherSpec& cipher,
                       const QuantumScenario& scenario, double years) {
  return attack_plan(cipher.search_space(),
                     static_cast<double>(cipher.depth()), scenario, years);
}

double cost_time_product(double search_space, double depth,
                         const QuantumScenario& scenario) {
  check_search(search_space, depth);
  const double s = scenario.layers_per_year();
  return scenario.ccy_cost_usd() * kPi * kPi * search_space * depth * depth /
         (16.0 * s * s);
}

double cost_time_product(const CipherSpec& cipher,
                         const QuantumScenario& scenario) {
  return cost_time_product(cipher.search_space(),
                           static_cast<double>(cipher.depth()), scenario);
}

double closed_form_cost(const CipherSpec& cipher,
                        const QuantumScenario& scenario, double years) {
  if (!(years > 0.0)) {
    throw std::invalid_argument("attack time must be > 0 years");
  }
  return cost_time_product(cipher, scenario) / years;
}

double depth_improvement_factor(double parallelism, double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw std::invalid_argument("depth reduction factor must lie in (0, 1]");
  }
  if (!(parallelism >= 1.0)) {
    throw std::invalid_argument("parallelism must be >= 1");
  }
  return beta * beta * parallelism;
}

}  // namespace qkr

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

#include "qkr/classical.hpp"

#include <cmath>
#include <stdexcept>

namespace qkr {
namespace {

constexpr double kSecondsPerHour = 3600.0;

double expected_guesses(int key_bits) {
  if (key_bits < 1) {
    throw std::invalid_argument("key_bits must be >= 1");
  }
  return std::ldexp(1.0, key_bits - 1);
}

}  // namespace

void validate(const ClassicalRig& rig) {
  if (!(rig.guesses_per_sec > 0.0) || !(rig.power_kw > 0.0) ||
      !(rig.price_per_kwh > 0.0)) {
    throw std::invalid_argument("classical rig parameters must be positive");
  }
}

double published_cost_per_guess(const ClassicalRig& rig) {
  validate(rig);
  return rig.power_kw * rig.price_per_kwh * kSecondsPerHour /
         rig.guesses_per_sec;
}

double energy_cost_per_guess(const ClassicalRig& rig) {
  validate(rig);
  return rig.power_kw / rig.guesses_per_sec / kSecondsPerHour *
         rig.price_per_kwh;
}

double classical_expected_cost(const ClassicalRig& rig, int key_bits) {
  return expected_guesses(key_bits) * published_cost_per_guess(rig);
}

double classical_energy_cost(const ClassicalRig& rig, int key_bits) {
  return expected_guesses(key_bits) * energy_cost_per_guess(rig);
}

}  // namespace qkr

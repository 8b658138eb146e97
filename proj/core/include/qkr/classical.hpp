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

// Electricity-only cost of a classical brute-force key search on an FPGA rig.

#pragma once

namespace qkr {

struct ClassicalRig {
  double guesses_per_sec = 3.5e8;
  double power_kw = 0.0066;
  double price_per_kwh = 0.08;
};

/// Throws std::invalid_argument unless every rig parameter is positive.
void validate(const ClassicalRig& rig);

/// Published per-guess figure: power_kw * price_per_kwh * 3600 /
/// guesses_per_sec (about 5.43e-9 USD for the default rig).
double published_cost_per_guess(const ClassicalRig& rig);

/// Energy-accounted per-guess figure: kWh per guess times price, i.e.
/// power_kw / guesses_per_sec / 3600 * price_per_kwh (about 4.19e-16 USD).
double energy_cost_per_guess(const ClassicalRig& rig);

/// Expected cost of the search, 2^(n-1) guesses at the published rate.
double classical_expected_cost(const ClassicalRig& rig, int key_bits);

/// Same expected guess count at the energy-accounted rate.
double classical_energy_cost(const ClassicalRig& rig, int key_bits);

}  // namespace qkr

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

#include "qkr/batch.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "qkr/cost.hpp"

namespace qkr {

BatchSpec::BatchSpec(std::uint64_t num_keys, CipherSpec cipher)
    : num_keys_(num_keys), cipher_(std::move(cipher)) {
  if (num_keys_ < 1) {
    throw std::invalid_argument("batch needs at least one key");
  }
  if (cipher_.key_bits() < 64 &&
      num_keys_ > (std::uint64_t{1} << cipher_.key_bits())) {
    throw std::invalid_argument("batch size exceeds the key space");
  }
}

double BatchSpec::effective_search_space() const {
  return cipher_.search_space() / static_cast<double>(num_keys_);
}

double batch_oracle_depth(const BatchSpec& spec) {
  const std::uint64_t m = spec.num_keys();
  const std::uint64_t n = static_cast<std::uint64_t>(spec.cipher().key_bits());
  const std::uint64_t w = spec.cipher().width();
  // ceil(m n / w) without forming m n, which overflows for huge batches.
  const std::uint64_t q = m / w;
  const std::uint64_t r = m % w;
  const double membership = static_cast<double>(q) * static_cast<double>(n) +
                            static_cast<double>((r * n + w - 1) / w);
  return static_cast<double>(spec.cipher().depth()) + membership;
}

AttackPlan batch_attack_plan(const BatchSpec& spec,
                             const QuantumScenario& scenario, double years) {
  return attack_plan(spec.effective_search_space(), batch_oracle_depth(spec),
                     scenario, years);
}

double batch_heuristic_cost(const BatchSpec& spec,
                            const QuantumScenario& scenario, double years) {
  return attack_plan(spec.cipher(), scenario, years).cost_usd /
         batch_time_speedup(spec.num_keys());
}

double batch_time_speedup(std::uint64_t num_keys) {
  if (num_keys < 1) {
    throw std::invalid_argument("batch needs at least one key");
  }
  return std::sqrt(static_cast<double>(num_keys));
}

}  // namespace qkr

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

// m-to-1 key recovery: find any one of M keys that all encrypt the same
// known plaintext. The Grover oracle encrypts the plaintext under the
// candidate key and tests membership of the result in {c_1, ..., c_M}, so
// the effective search space shrinks to N / M while the oracle grows a
// membership check on top of the cipher circuit.

#pragma once

#include <cstdint>

#include "qkr/model.hpp"

namespace qkr {

class BatchSpec {
 public:
  /// Throws std::invalid_argument unless 1 <= num_keys <= 2^key_bits.
  BatchSpec(std::uint64_t num_keys, CipherSpec cipher);

  std::uint64_t num_keys() const { return num_keys_; }
  const CipherSpec& cipher() const { return cipher_; }

  /// N / M.
  double effective_search_space() const;

 private:
  std::uint64_t num_keys_;
  CipherSpec cipher_;
};

/// d_F = d + ceil(M n / w). The two cipher calls per query run side by side
/// (width, not depth); comparing against M stored n-bit ciphertexts on a
/// circuit no wider than the cipher costs ceil(M n / w) layers.
double batch_oracle_depth(const BatchSpec& spec);

/// attack_plan over N / M candidates with oracle depth d_F.
AttackPlan batch_attack_plan(const BatchSpec& spec,
                             const QuantumScenario& scenario, double years);

/// Single-key cost divided by sqrt(M): the fixed-parallelism reading of the
/// sqrt(M) speedup. Reported next to the formula cost for comparison only.
double batch_heuristic_cost(const BatchSpec& spec,
                            const QuantumScenario& scenario, double years);

/// Sequential-time reduction sqrt(M). Throws std::invalid_argument for M < 1.
double batch_time_speedup(std::uint64_t num_keys);

}  // namespace qkr

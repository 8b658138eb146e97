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

// Small-scale Grover search, used to check the query-count constants the
// cost model takes for granted.
//
// Two independent routes compute the same success probability:
//   - the rotation model, sin^2((2j+1) theta) with theta = asin(sqrt(M/N)),
//   - a real-amplitude statevector driven through phase query and inversion
//     about the mean.
// On top of those sit a Monte Carlo of partitioned (k-bucket, M-target)
// search and the exact block-hit probability for batch attacks.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qkr::grover {

inline constexpr int kMaxStatevectorBits = 16;
inline constexpr int kMaxRotationBits = 62;

/// Success probability after `iterations` Grover iterations over N items
/// with `targets` marked ones. Throws std::invalid_argument unless
/// 1 <= targets <= space.
double rotation_success_prob(std::uint64_t space, std::uint64_t targets,
                             std::uint64_t iterations);

/// floor((pi/4) sqrt(N / targets)).
std::uint64_t optimal_iterations(std::uint64_t space, std::uint64_t targets);

class GroverInstance {
 public:
  /// Throws std::invalid_argument if targets is empty, has duplicates or
  /// holds an index >= 2^space_bits, or if buckets < 1.
  GroverInstance(int space_bits, std::vector<std::uint64_t> targets,
                 std::uint64_t iterations, std::uint64_t buckets = 1);

  int space_bits() const { return space_bits_; }
  std::uint64_t space() const { return std::uint64_t{1} << space_bits_; }
  const std::vector<std::uint64_t>& targets() const { return targets_; }
  std::uint64_t iterations() const { return iterations_; }
  std::uint64_t buckets() const { return buckets_; }

 private:
  int space_bits_;
  std::vector<std::uint64_t> targets_;  // sorted, unique
  std::uint64_t iterations_;
  std::uint64_t buckets_;
};

/// Probability mass on the targets after simulating the full amplitude
/// vector. Throws std::length_error above kMaxStatevectorBits.
double statevector_grover(const GroverInstance& instance);

struct PartitionedTrial {
  bool success = false;
  std::uint64_t total_queries = 0;
  std::uint64_t sequential_queries = 0;
};

/// One run of k-parallel search for any of `targets` random marked items.
///
/// With targets > 1 the space is first cut into `targets` equal blocks and
/// one block is picked at random; the chosen block (the whole space when
/// targets == 1) is split into `buckets` equal buckets, padded when the
/// sizes do not divide. Each bucket runs optimal_iterations(bucket, 1)
/// iterations and succeeds with its rotation-model probability.
///
/// The RNG stream depends only on (seed, trial_index).
PartitionedTrial partitioned_search_trial(std::uint64_t space,
                                          std::uint64_t buckets,
                                          std::uint64_t targets,
                                          std::uint64_t seed,
                                          std::uint64_t trial_index = 0);

struct PartitionedStats {
  std::uint64_t trials = 0;
  double mean_total_queries = 0.0;
  double mean_sequential_queries = 0.0;
  double success_rate = 0.0;
};

/// Runs trials 0..trials-1 across `threads` workers (0 picks the hardware
/// concurrency). Results do not depend on the thread count.
PartitionedStats run_partitioned_trials(std::uint64_t space,
                                        std::uint64_t buckets,
                                        std::uint64_t targets,
                                        std::uint64_t seed,
                                        std::uint64_t trials,
                                        unsigned threads = 0);

/// Pr[a fixed block of size N/M holds at least one of M targets drawn
/// without replacement] = 1 - C(N - N/M, M) / C(N, M), in log space.
/// Throws std::invalid_argument unless 1 <= M <= N and M divides N.
double block_hit_probability(std::uint64_t space, std::uint64_t blocks);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

/// Every invariant the cost model relies on, at desk scale.
std::vector<CheckResult> run_verification_suite(std::uint64_t seed,
                                                std::uint64_t trials = 10000);

}  // namespace qkr::grover

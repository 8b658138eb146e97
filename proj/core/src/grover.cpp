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

#include "qkr/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

namespace qkr::grover {
namespace {

constexpr double kPi = std::numbers::pi;

// Portable draws on top of mt19937_64; the std distributions are
// implementation-defined and would break cross-platform reproducibility.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed),
                      static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index),
                      static_cast<std::uint32_t>(index >> 32)};
    engine_.seed(seq);
  }

  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t reject_under = (0 - n) % n;
    for (;;) {
      const std::uint64_t x = engine_();
      if (x >= reject_under) return x % n;
    }
  }

 private:
  std::mt19937_64 engine_;
};

// Floyd's sampling of `count` distinct values in [0, space).
std::vector<std::uint64_t> sample_distinct(Stream& rng, std::uint64_t space,
                                           std::uint64_t count) {
  std::unordered_set<std::uint64_t> chosen;
  std::vector<std::uint64_t> ordered;
  ordered.reserve(count);
  for (std::uint64_t j = space - count; j < space; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    const std::uint64_t pick = chosen.contains(t) ? j : t;
    chosen.insert(pick);
    ordered.push_back(pick);
  }
  return ordered;
}

std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) {
  return a / b + (a % b != 0 ? 1 : 0);
}

void check_counts(std::uint64_t space, std::uint64_t targets) {
  if (targets < 1 || targets > space) {
    throw std::invalid_argument("need 1 <= targets <= search space");
  }
}

}  // namespace

double rotation_success_prob(std::uint64_t space, std::uint64_t targets,
                             std::uint64_t iterations) {
  check_counts(space, targets);
  const double theta = std::asin(std::sqrt(static_cast<double>(targets) /
                                           static_cast<double>(space)));
  const double s =
      std::sin((2.0 * static_cast<double>(iterations) + 1.0) * theta);
  return s * s;
}

std::uint64_t optimal_iterations(std::uint64_t space, std::uint64_t targets) {
  check_counts(space, targets);
  return static_cast<std::uint64_t>(
      std::floor(kPi / 4.0 * std::sqrt(static_cast<double>(space) /
                                       static_cast<double>(targets))));
}

GroverInstance::GroverInstance(int space_bits,
                               std::vector<std::uint64_t> targets,
                               std::uint64_t iterations, std::uint64_t buckets)
    : space_bits_(space_bits), targets_(std::move(targets)),
      iterations_(iterations), buckets_(buckets) {
  if (space_bits_ < 1 || space_bits_ > kMaxRotationBits) {
    throw std::invalid_argument("space_bits out of range");
  }
  if (targets_.empty()) {
    throw std::invalid_argument("at least one target is required");
  }
  if (buckets_ < 1) {
    throw std::invalid_argument("buckets must be >= 1");
  }
  std::sort(targets_.begin(), targets_.end());
  if (std::adjacent_find(targets_.begin(), targets_.end()) != targets_.end()) {
    throw std::invalid_argument("targets must be distinct");
  }
  if (targets_.back() >= space()) {
    throw std::invalid_argument("target index outside the search space");
  }
}

double statevector_grover(const GroverInstance& instance) {
  if (instance.space_bits() > kMaxStatevectorBits) {
    throw std::length_error("statevector simulation limited to 16 qubits");
  }
  const std::size_t n = static_cast<std::size_t>(instance.space());
  const auto& targets = instance.targets();

  // H^n |0>: uniform superposition.
  std::vector<double> amp(n, 1.0 / std::sqrt(static_cast<double>(n)));
  for (std::uint64_t it = 0; it < instance.iterations(); ++it) {
    for (std::uint64_t t : targets) amp[t] = -amp[t];  // phase query
    double sum = 0.0;
    for (double a : amp) sum += a;
    const double twice_mean = 2.0 * sum / static_cast<double>(n);
    for (double& a : amp) a = twice_mean - a;  // inversion about the mean
  }
  double p = 0.0;
  for (std::uint64_t t : targets) p += amp[t] * amp[t];
  return p;
}

PartitionedTrial partitioned_search_trial(std::uint64_t space,
                                          std::uint64_t buckets,
                                          std::uint64_t targets,
                                          std::uint64_t seed,
                                          std::uint64_t trial_index) {
  check_counts(space, targets);
  if (buckets < 1) throw std::invalid_argument("buckets must be >= 1");

  Stream rng(seed, trial_index);
  const std::vector<std::uint64_t> marked =
      sample_distinct(rng, space, targets);

  std::uint64_t block_start = 0;
  std::uint64_t block_len = space;
  if (targets > 1) {
    const std::uint64_t block_size = ceil_div(space, targets);
    const std::uint64_t block_count = ceil_div(space, block_size);
    block_start = rng.below(block_count) * block_size;
    block_len = std::min(block_size, space - block_start);
  }

  const std::uint64_t bucket_size = ceil_div(block_len, buckets);
  std::vector<std::uint64_t> hits(buckets, 0);
  for (std::uint64_t x : marked) {
    if (x >= block_start && x < block_start + block_len) {
      ++hits[(x - block_start) / bucket_size];
    }
  }

  PartitionedTrial trial;
  const std::uint64_t iters = optimal_iterations(bucket_size, 1);
  trial.sequential_queries = iters;
  trial.total_queries = iters * buckets;
  for (std::uint64_t b = 0; b < buckets; ++b) {
    if (hits[b] == 0) continue;
    const double p = rotation_success_prob(bucket_size, hits[b], iters);
    if (rng.uniform01() < p) trial.success = true;
  }
  return trial;
}

PartitionedStats run_partitioned_trials(std::uint64_t space,
                                        std::uint64_t buckets,
                                        std::uint64_t targets,
                                        std::uint64_t seed,
                                        std::uint64_t trials,
                                        unsigned threads) {
  PartitionedStats stats;
  stats.trials = trials;
  if (trials == 0) return stats;
  check_counts(space, targets);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, trials));

  std::vector<PartitionedTrial> results(trials);
  {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = ceil_div(trials, threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(trials, lo + chunk);
      pool.emplace_back([&, lo, hi] {
        for (std::uint64_t i = lo; i < hi; ++i) {
          results[i] =
              partitioned_search_trial(space, buckets, targets, seed, i);
        }
      });
    }
  }

  double total = 0.0;
  double sequential = 0.0;
  std::uint64_t successes = 0;
  for (const PartitionedTrial& r : results) {
    total += static_cast<double>(r.total_queries);
    sequential += static_cast<double>(r.sequential_queries);
    successes += r.success ? 1 : 0;
  }
  const double n = static_cast<double>(trials);
  stats.mean_total_queries = total / n;
  stats.mean_sequential_queries = sequential / n;
  stats.success_rate = static_cast<double>(successes) / n;
  return stats;
}

double block_hit_probability(std::uint64_t space, std::uint64_t blocks) {
  if (blocks < 1 || blocks > space || space % blocks != 0) {
    throw std::invalid_argument("need 1 <= M <= N with M dividing N");
  }
  const std::uint64_t block = space / blocks;
  if (space - block < blocks) return 1.0;  // C(N - N/M, M) == 0
  // log C(N-B, M) - log C(N, M) = sum_{i<M} log1p(-B / (N - i)), and the
  // same ratio equals C(N-M, B) / C(N, B), so sum over the shorter side.
  const std::uint64_t terms = std::min(block, blocks);
  const double step = static_cast<double>(std::max(block, blocks));
  double log_miss = 0.0;
  for (std::uint64_t i = 0; i < terms; ++i) {
    log_miss += std::log1p(-step / static_cast<double>(space - i));
  }
  return -std::expm1(log_miss);
}

}  // namespace qkr::grover

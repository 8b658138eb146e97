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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "qkr/grover.hpp"

namespace qkr::grover {
namespace {

template <typename... Args>
std::string format(const char* fmt, Args... args) {
  char buf[256];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

// Targets spread over the space so that different bits are exercised.
std::vector<std::uint64_t> spread_targets(int bits, std::uint64_t count) {
  const std::uint64_t space = std::uint64_t{1} << bits;
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 0; i < count; ++i) {
    out.push_back((i * 0x9E3779B97F4A7C15ull + 7) % space);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  for (std::uint64_t v = 0; out.size() < count; ++v) {
    if (!std::binary_search(out.begin(), out.end(), v)) {
      out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    }
  }
  return out;
}

CheckResult statevector_matches_rotation() {
  double worst = 0.0;
  int cases = 0;
  for (int bits = 1; bits <= 12; ++bits) {
    const std::uint64_t space = std::uint64_t{1} << bits;
    for (std::uint64_t m : {1u, 2u, 4u}) {
      if (m > space) continue;
      const auto targets = spread_targets(bits, m);
      const std::uint64_t limit = 2 * optimal_iterations(space, m);
      for (std::uint64_t j = 0; j <= limit; ++j) {
        const double sv = statevector_grover(GroverInstance(bits, targets, j));
        const double rot = rotation_success_prob(space, m, j);
        worst = std::max(worst, std::abs(sv - rot));
        ++cases;
      }
    }
  }
  return {"statevector == rotation model (n<=12, |S| in {1,2,4})",
          worst <= 1e-9, format("%d cases, max |diff| = %.3e", cases, worst)};
}

CheckResult optimal_success_bound() {
  double worst_margin = 1.0;
  for (int bits = 4; bits <= 24; ++bits) {
    const std::uint64_t space = std::uint64_t{1} << bits;
    const double p =
        rotation_success_prob(space, 1, optimal_iterations(space, 1));
    worst_margin =
        std::min(worst_margin, p - (1.0 - 1.0 / static_cast<double>(space)));
  }
  return {"success at floor(pi/4 sqrt N) >= 1 - 1/N (N = 2^4..2^24)",
          worst_margin >= 0.0, format("min margin = %.3e", worst_margin)};
}

CheckResult over_rotation() {
  bool ok = true;
  for (int bits = 4; bits <= 24; ++bits) {
    const std::uint64_t space = std::uint64_t{1} << bits;
    const std::uint64_t j = optimal_iterations(space, 1);
    ok = ok && rotation_success_prob(space, 1, 2 * j) <
                   rotation_success_prob(space, 1, j);
  }
  return {"2x optimal iterations lowers success (N >= 16)", ok, ""};
}

CheckResult four_item_certainty() {
  const double p = statevector_grover(GroverInstance(2, {3}, 1));
  return {"N=4, one target, one iteration succeeds with certainty", p == 1.0,
          format("p = %.17g", p)};
}

CheckResult block_hits() {
  bool ok = true;
  double worst = 1.0;
  for (int bits = 2; bits <= 20; bits += 2) {
    const std::uint64_t space = std::uint64_t{1} << bits;
    for (std::uint64_t m = 2; m <= space / 2; m *= 2) {
      if (m > 4096) break;
      const double p = block_hit_probability(space, m);
      worst = std::min(worst, p);
      ok = ok && p >= 1.0 - 1.0 / std::numbers::e;
    }
  }
  const double quarter = block_hit_probability(4, 2);
  ok = ok && std::abs(quarter - 5.0 / 6.0) <= 1e-15;
  return {"block hit probability >= 1 - 1/e, (4,2) = 5/6", ok,
          format("min = %.6f, (4,2) = %.15f", worst, quarter)};
}

CheckResult total_query_scaling(std::uint64_t seed, std::uint64_t trials) {
  constexpr std::uint64_t kSpace = std::uint64_t{1} << 16;
  double worst = 0.0;
  for (std::uint64_t k : {1u, 4u, 16u, 64u}) {
    const PartitionedStats s = run_partitioned_trials(kSpace, k, 1, seed,
                                                      trials);
    const double expected = std::numbers::pi / 4.0 *
                            std::sqrt(static_cast<double>(kSpace * k));
    worst = std::max(worst, std::abs(s.mean_total_queries / expected - 1.0));
  }
  return {"total queries ~ (pi/4) sqrt(N k), k in {1,4,16,64}",
          worst <= 0.05, format("max rel dev = %.4f", worst)};
}

CheckResult batch_sequential_scaling(std::uint64_t seed,
                                     std::uint64_t trials) {
  constexpr std::uint64_t kSpace = std::uint64_t{1} << 16;
  constexpr std::uint64_t kBuckets = 16;
  const PartitionedStats single =
      run_partitioned_trials(kSpace, kBuckets, 1, seed, trials);
  double worst = 0.0;
  double min_success = 1.0;
  for (std::uint64_t m : {1u, 4u, 16u}) {
    const PartitionedStats s =
        run_partitioned_trials(kSpace, kBuckets, m, seed, trials);
    const double ratio = s.mean_sequential_queries /
                         single.mean_sequential_queries;
    worst = std::max(worst,
                     std::abs(ratio * std::sqrt(static_cast<double>(m)) - 1.0));
    min_success = std::min(min_success, s.success_rate);
  }
  return {"sequential queries scale as 1/sqrt(M), M in {1,4,16}; success > 1/2",
          worst <= 0.10 && min_success > 0.5,
          format("max rel dev = %.4f, min success = %.4f", worst,
                 min_success)};
}

}  // namespace

std::vector<CheckResult> run_verification_suite(std::uint64_t seed,
                                                std::uint64_t trials) {
  return {
      statevector_matches_rotation(),
      optimal_success_bound(),
      over_rotation(),
      four_item_certainty(),
      block_hits(),
      total_query_scaling(seed, trials),
      batch_sequential_scaling(seed, trials),
  };
}

}  // namespace qkr::grover

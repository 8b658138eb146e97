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

#include <benchmark/benchmark.h>

#include <cstdint>

#include "qkr/config.hpp"
#include "qkr/cost.hpp"
#include "qkr/grover.hpp"
#include "qkr/lambert_w.hpp"
#include "qkr/strategy.hpp"

namespace {

void BM_LambertPrincipal(benchmark::State& state) {
  double x = 0.5;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::lambert_w(qkr::LambertBranch::kPrincipal, x));
    x = x < 1e6 ? x * 1.7 : 0.5;
  }
}
BENCHMARK(BM_LambertPrincipal);

void BM_LambertMinusOne(benchmark::State& state) {
  double x = -0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::lambert_w(qkr::LambertBranch::kMinusOne, x));
    x = x < -1e-12 ? x * 0.5 : -0.3;
  }
}
BENCHMARK(BM_LambertMinusOne);

void BM_AttackPlan(benchmark::State& state) {
  const auto config = qkr::preset_config();
  const auto& cipher = config.cipher("aes128-d57894");
  const auto& scenario = config.scenario("mania");
  double years = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::attack_plan(cipher, scenario, years));
    years = years < 1e4 ? years * 1.3 : 1.0;
  }
}
BENCHMARK(BM_AttackPlan);

void BM_OptimalAttackDelta(benchmark::State& state) {
  const qkr::CostCurve curve{1e10, 1e6};
  const qkr::RewardModel model = qkr::DeltaReward{1e12, 0.9, 50.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::optimal_attack(curve, model));
  }
}
BENCHMARK(BM_OptimalAttackDelta);

void BM_Statevector(benchmark::State& state) {
  const int bits = static_cast<int>(state.range(0));
  const std::uint64_t space = std::uint64_t{1} << bits;
  const qkr::grover::GroverInstance instance(
      bits, {space / 3}, qkr::grover::optimal_iterations(space, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::grover::statevector_grover(instance));
  }
}
BENCHMARK(BM_Statevector)->Arg(8)->Arg(12)->Arg(16);

void BM_PartitionedTrials(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::grover::run_partitioned_trials(
        std::uint64_t{1} << 16, 16, 4, 7, 1000, 1));
  }
}
BENCHMARK(BM_PartitionedTrials);

void BM_BlockHit(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qkr::grover::block_hit_probability(
        std::uint64_t{1} << 20, std::uint64_t{1} << 10));
  }
}
BENCHMARK(BM_BlockHit);

}  // namespace

BENCHMARK_MAIN();

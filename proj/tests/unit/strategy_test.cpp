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

#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "qkr/cost.hpp"
#include "qkr/strategy.hpp"
#include "test_support.hpp"

using qkr_test::rel_err;

namespace {

const qkr::CipherSpec kAes("aes128", 128, 57894, 1000);
const qkr::QuantumScenario kMania("mania", 6e10, 50);

// Dense grid maximum of v delta^T 1[T <= horizon] - lambda / T over
// (0, hi], returned as (T, profit); profit 0 at T = 0 is included.
struct GridMax {
  double years = 0.0;
  double profit = 0.0;
};

GridMax grid_max(double lambda, double v, double delta, double horizon,
                 double hi, double step) {
  GridMax best;
  const double ld = std::log(delta);
  for (double i = 1;; ++i) {
    const double t = i * step;
    if (t > hi) break;
    const double r = t <= horizon ? v * std::exp(t * ld) : 0.0;
    const double p = r - lambda / t;
    if (p > best.profit) best = {t, p};
  }
  return best;
}

}  // namespace

TEST_CASE("reward examples") {
  using qkr::RewardModel;
  CHECK(qkr::reward(RewardModel{qkr::ThresholdReward{1e6, 10}}, 10) == 1e6);
  CHECK(qkr::reward(RewardModel{qkr::ThresholdReward{1e6, 10}}, 10.001) == 0);
  CHECK(qkr::reward(RewardModel{qkr::DeltaReward{1e6, 0.5}}, 1) == 5e5);
  CHECK(qkr::reward(RewardModel{qkr::DeltaReward{1e6, 0.9, 5}}, 6) == 0);
  CHECK(rel_err(qkr::reward(RewardModel{qkr::DeltaReward{1e6, 0.9, 5}}, 5),
                1e6 * std::pow(0.9, 5)) < 1e-14);
  CHECK(qkr::reward(RewardModel{qkr::ConstantReward{3}}, 1e9) == 3);
  CHECK(qkr::reward(RewardModel{qkr::ConstantReward{3}}, 1, 8.0) == 8);
}

TEST_CASE("delta with unit discount and no horizon equals constant") {
  qkr_test::Draw draw(21);
  for (int i = 0; i < 500; ++i) {
    const double v = draw.log_uniform(1e-2, 1e15);
    const double t = draw.log_uniform(1e-4, 1e7);
    const qkr::RewardModel c = qkr::ConstantReward{v};
    const qkr::RewardModel d = qkr::DeltaReward{v, 1.0, qkr::kInfinity};
    CHECK(qkr::reward(c, t) == qkr::reward(d, t));
    CHECK(qkr::profit(kAes, kMania, c, t) == qkr::profit(kAes, kMania, d, t));
  }
  const qkr::RewardModel c = qkr::ConstantReward{1e12};
  const qkr::RewardModel d = qkr::DeltaReward{1e12, 1.0};
  const auto oc = qkr::optimal_attack(kAes, kMania, c);
  const auto od = qkr::optimal_attack(kAes, kMania, d);
  CHECK(oc.attack_years == od.attack_years);
  CHECK(oc.profit_usd == od.profit_usd);
}

TEST_CASE("rewards are non-increasing in time") {
  qkr_test::Draw draw(22);
  for (int i = 0; i < 2000; ++i) {
    const double v = draw.log_uniform(1, 1e9);
    const double h = draw.log_uniform(0.1, 100);
    const double t = draw.log_uniform(1e-3, 200);
    const double eps = draw.log_uniform(1e-9, 10);
    for (const qkr::RewardModel& m :
         {qkr::RewardModel{qkr::ConstantReward{v}},
          qkr::RewardModel{qkr::ThresholdReward{v, h}},
          qkr::RewardModel{qkr::DeltaReward{v, draw.uniform(0.01, 1.0), h}}}) {
      CHECK(qkr::reward(m, t + eps) <= qkr::reward(m, t));
    }
  }
}

TEST_CASE("profit examples") {
  const qkr::RewardModel rich = qkr::ThresholdReward{1e11, 100};
  const qkr::RewardModel poor = qkr::ThresholdReward{1e9, 100};
  CHECK(qkr::profit(kAes, kMania, rich, 0) == 0.0);
  CHECK(qkr::profit(kAes, kMania, poor, 0) == 0.0);
  const double cost = qkr_test::oracle_cost(128, 57894, 6e10, 50, 100);
  const double p = qkr::profit(kAes, kMania, rich, 100);
  CHECK(rel_err(p, 1e11 - cost) < 1e-9);
  CHECK(p > 0);
  CHECK(qkr::profit(kAes, kMania, poor, 100) < 0);
}

TEST_CASE("optimizer on the unit delta example") {
  const qkr::CostCurve curve{0.01};
  const qkr::RewardModel model = qkr::DeltaReward{1.0, 0.5};
  const auto sp = qkr::stationary_points(0.01, 1.0, 0.5);
  REQUIRE(sp.principal.has_value());
  REQUIRE(sp.minus_one.has_value());
  CHECK(*sp.principal == doctest::Approx(0.1254).epsilon(1e-3));
  CHECK(*sp.minus_one == doctest::Approx(13.65).epsilon(1e-3));

  const GridMax grid = grid_max(0.01, 1.0, 0.5, qkr::kInfinity, 50, 1e-4);
  CHECK(grid.years == doctest::Approx(0.1254).epsilon(1e-3));
  CHECK(grid.profit == doctest::Approx(0.837).epsilon(1e-3));

  const auto out = qkr::optimal_attack(curve, model);
  REQUIRE(out.attacks());
  CHECK(rel_err(*out.attack_years, *sp.principal) < 1e-15);
  CHECK(out.profit_usd >= grid.profit - 1e-6);
  CHECK(out.profit_usd - grid.profit < 1e-6);
}

TEST_CASE("stationary points satisfy the first-order condition") {
  qkr_test::Draw draw(23);
  int seen = 0;
  for (int i = 0; i < 2000; ++i) {
    const double lambda = draw.log_uniform(1e-4, 1e4);
    const double v = draw.log_uniform(1e-2, 1e6);
    const double delta = draw.uniform(0.01, 0.999);
    const auto sp = qkr::stationary_points(lambda, v, delta);
    for (const auto& t : {sp.principal, sp.minus_one}) {
      if (!t) continue;
      ++seen;
      const double scale = lambda / (*t * *t);
      CHECK(std::fabs(v * std::pow(delta, *t) * std::log(delta) + scale) <=
            1e-6 * scale);
    }
  }
  CHECK(seen > 1000);
}

TEST_CASE("stationary points vanish without a real solution") {
  const auto none = qkr::stationary_points(1e4, 1e-2, 0.5);
  CHECK_FALSE(none.principal.has_value());
  CHECK_FALSE(none.minus_one.has_value());
  const auto flat = qkr::stationary_points(1.0, 1.0, 1.0);
  CHECK_FALSE(flat.principal.has_value());
}

TEST_CASE("constant reward attacks sequentially") {
  const auto out =
      qkr::optimal_attack(kAes, kMania, qkr::ConstantReward{1e12});
  REQUIRE(out.attacks());
  const double seq = qkr::sequential_time(kAes, kMania);
  CHECK(rel_err(*out.attack_years, seq) < 1e-12);
  CHECK(qkr::attack_plan(kAes, kMania, *out.attack_years).parallelism ==
        doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("threshold reward finishes at the horizon") {
  const auto out =
      qkr::optimal_attack(kAes, kMania, qkr::ThresholdReward{1e11, 100});
  REQUIRE(out.attacks());
  CHECK(*out.attack_years == 100.0);
  CHECK(out.profit_usd == qkr::profit(kAes, kMania,
                                      qkr::ThresholdReward{1e11, 100}, 100));
}

TEST_CASE("unprofitable delta declines with exactly zero profit") {
  const auto out =
      qkr::optimal_attack(kAes, kMania, qkr::DeltaReward{1e9, 0.5});
  CHECK_FALSE(out.attacks());
  CHECK(out.profit_usd == 0.0);
}

TEST_CASE("ties resolve to no attack") {
  // Threshold at T' with v0 equal to the cost gives profit exactly 0.
  const qkr::CostCurve curve{4.0};
  const auto out = qkr::optimal_attack(curve, qkr::ThresholdReward{2.0, 2.0});
  CHECK_FALSE(out.attacks());
  CHECK(out.profit_usd == 0.0);
}

TEST_CASE("optimizer never loses to a grid search") {
  qkr_test::Draw draw(24);
  for (int i = 0; i < 40; ++i) {
    const double lambda = draw.log_uniform(1e-4, 1e4);
    const double v = draw.log_uniform(1e-2, 1e6);
    const double delta = draw.uniform(0.01, 0.999);
    const double horizon = draw.log_uniform(0.1, 200);
    const qkr::CostCurve curve{lambda};
    const auto out =
        qkr::optimal_attack(curve, qkr::DeltaReward{v, delta, horizon});
    const GridMax grid = grid_max(lambda, v, delta, horizon, horizon, 1e-3);
    CHECK(out.profit_usd >= grid.profit - 1e-6 * std::max(1.0, grid.profit));
    CHECK(out.attacks() == (grid.profit > 0));
    if (out.attacks()) {
      CHECK(*out.attack_years <= horizon);
    }
  }
}

TEST_CASE("min_profitable_value") {
  CHECK(rel_err(qkr::min_profitable_value(kAes, kMania, 100, 1.0), 9.81e10) < 5e-3);
  CHECK(rel_err(qkr::min_profitable_value(kAes, kMania, 1, 1.0), 9.81e12) < 5e-3);
  const double beta = qkr::attack_plan(kAes, kMania, 100).cost_usd;
  CHECK(rel_err(qkr::min_profitable_value(kAes, kMania, 100, 0.2), beta / 0.2) <
        1e-15);
  CHECK(rel_err(qkr::min_profitable_value(kAes, kMania, 100, 0.2), 4.905e11) <
        5e-3);

  qkr_test::Draw draw(25);
  for (int i = 0; i < 500; ++i) {
    const double t = draw.log_uniform(1e-2, 1e4);
    const double f = draw.log_uniform(1e-6, 1.0);
    CHECK(rel_err(qkr::min_profitable_value(kAes, kMania, t, f) * f,
                  qkr::attack_plan(kAes, kMania, t).cost_usd) < 1e-12);
  }
  CHECK_THROWS_AS(qkr::min_profitable_value(kAes, kMania, 100, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(qkr::min_profitable_value(kAes, kMania, 100, 1.5),
                  std::invalid_argument);
}

TEST_CASE("delta_from_remaining") {
  CHECK(rel_err(qkr::delta_from_remaining(0.25, 2), 0.5) < 1e-15);
  CHECK(qkr::delta_from_remaining(1.0, 7) == 1.0);
}

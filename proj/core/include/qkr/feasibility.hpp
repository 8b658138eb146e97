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

// Which quantum computers could finish a key search within a budget?
//
// A computer able to process s_total circuit layers before the deadline can
// afford the attack iff its CCY price satisfies C_CCY <= alpha * s_total^2.
// Note s_total is a layer count over the whole deadline, not a clock rate;
// gate_hz = s_total / (T_y * seconds per year).

#pragma once

#include <cstdint>
#include <vector>

namespace qkr {

/// alpha = 16 b / (pi^2 2^n T_y d^2). Throws std::invalid_argument unless
/// every argument is positive.
double family_coefficient(double budget_usd, double years, int key_bits,
                          double depth);

class FeasibilityFamily {
 public:
  FeasibilityFamily(double budget_usd, double years, int key_bits,
                    std::uint64_t depth);

  double budget_usd() const { return budget_usd_; }
  double years() const { return years_; }
  int key_bits() const { return key_bits_; }
  std::uint64_t depth() const { return depth_; }
  double coefficient() const { return alpha_; }

  /// Most expensive CCY price still inside the family at this clock rate.
  double max_ccy_at_speed(double gate_hz) const;
  bool contains(double gate_hz, double ccy_cost_usd) const;

 private:
  double budget_usd_;
  double years_;
  int key_bits_;
  std::uint64_t depth_;
  double alpha_;
};

struct RequiredSpeed {
  double total_layers;  // s_total over the whole deadline
  double gate_hz;
};

/// Speed at which a computer priced at `ccy_target` sits exactly on the
/// family boundary: s_total = sqrt(ccy_target / alpha).
RequiredSpeed required_speed(double alpha, double ccy_target, double years);

struct TradeoffPoint {
  double gate_hz;
  double max_ccy_usd;
};

/// `points` log-spaced clock rates over [lo_hz, hi_hz], endpoints included.
std::vector<TradeoffPoint> tradeoff_curve(const FeasibilityFamily& family,
                                          double lo_hz, double hi_hz,
                                          int points);

}  // namespace qkr

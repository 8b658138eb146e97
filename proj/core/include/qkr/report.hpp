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

// Report rows, golden-value regression and CSV/table emission behind the
// qkr command line tool.
//
// CSV output is locale independent: ',' separates fields, '.' is the
// decimal point, lines end in '\n' and numbers are written in shortest
// round-trip scientific notation with a lowercase 'e', so parsing a CSV
// field gives back the exact double the library computed.

#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "qkr/batch.hpp"
#include "qkr/classical.hpp"
#include "qkr/feasibility.hpp"
#include "qkr/model.hpp"

namespace qkr::report {

enum class Format { kTable, kCsv };

/// Shortest scientific representation that parses back to `value`.
std::string format_exact(double value);

/// Scientific with `digits` significant digits, for human tables.
std::string format_sig(double value, int digits = 4);

/// `points` log-spaced samples over [lo, hi] with exact endpoints.
std::vector<double> log_space(double lo, double hi, int points);

// Cost tables: scenario,T_years,t_layers,k,cost_ccy,cost_usd

struct CostRow {
  std::string scenario;
  double years;
  AttackPlan plan;
};

CostRow cost_row(const QuantumScenario& scenario, const CipherSpec& cipher,
                 double years);

void write_cost_rows(std::ostream& out, std::span<const CostRow> rows,
                     Format format);

// Golden regression against the published figures.

struct GoldenCheck {
  std::string name;
  double expected;
  double actual;
  double tolerance;  // relative

  double rel_error() const;
  bool passed() const;
};

/// Perturbations used to confirm the regression is sensitive to its inputs.
struct ReproduceOptions {
  double depth_scale = 1.0;
  /// Multiplies layers per year, i.e. the effect of a different
  /// seconds-per-year constant on every layer budget.
  double layers_per_year_scale = 1.0;
};

std::vector<GoldenCheck> reproduce(const ReproduceOptions& options = {});

/// Returns true when every check passed.
bool write_golden_report(std::ostream& out, std::span<const GoldenCheck> checks,
                         Format format);

// Curves: min-value -> delta_pow,v_min_usd ; feasibility -> gate_hz,max_ccy_usd

struct MinValuePoint {
  double remaining_fraction;  // delta^T_y
  double min_value_usd;
};

std::vector<MinValuePoint> min_value_curve(const CipherSpec& cipher,
                                           const QuantumScenario& scenario,
                                           double years, double lo, double hi,
                                           int points);

void write_min_value_curve(std::ostream& out,
                           std::span<const MinValuePoint> curve, Format format);

void write_feasibility_curve(std::ostream& out,
                             std::span<const TradeoffPoint> curve,
                             Format format);

// Single-result reports.

void write_outcome(std::ostream& out, const ProfitOutcome& outcome,
                   Format format);

struct BatchReport {
  std::uint64_t num_keys;
  double oracle_depth;
  AttackPlan single_key;
  AttackPlan batch;
  double heuristic_cost_usd;
  double time_speedup;
};

BatchReport batch_report(const BatchSpec& spec,
                         const QuantumScenario& scenario, double years);

void write_batch(std::ostream& out, const BatchReport& report, Format format);

void write_classical(std::ostream& out, const ClassicalRig& rig, int key_bits,
                     Format format);

}  // namespace qkr::report

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

#include "qkr/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

#include "qkr/config.hpp"
#include "qkr/cost.hpp"
#include "qkr/strategy.hpp"

namespace qkr::report {
namespace {

// Rows of cells rendered either as CSV or as a left-aligned text table.
class Grid {
 public:
  explicit Grid(std::vector<std::string> header) {
    rows_.push_back(std::move(header));
  }

  void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

  void write(std::ostream& out, Format format) const {
    if (format == Format::kCsv) {
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (i) out << ',';
          out << row[i];
        }
        out << '\n';
      }
      return;
    }
    std::vector<std::size_t> widths;
    for (const auto& row : rows_) {
      widths.resize(std::max(widths.size(), row.size()), 0);
      for (std::size_t i = 0; i < row.size(); ++i) {
        widths[i] = std::max(widths[i], row[i].size());
      }
    }
    for (const auto& row : rows_) {
      std::string line;
      for (std::size_t i = 0; i < row.size(); ++i) {
        line += row[i];
        if (i + 1 < row.size()) line.append(widths[i] - row[i].size() + 2, ' ');
      }
      out << line << '\n';
    }
  }

 private:
  std::vector<std::vector<std::string>> rows_;
};

std::string number(double value, Format format) {
  return format == Format::kCsv ? format_exact(value) : format_sig(value);
}

struct TableCell {
  const char* scenario;
  double years;
  double layers;
  double parallelism;
  double cost_ccy;
  double cost_usd;
};

// Published threshold-attack tables for d = 57894.
constexpr TableCell kPublishedTables[] = {
    {"mania", 100, 1.892e20, 1.962e7, 1.962e9, 9.810e10},
    {"optimistic", 100, 3.154e18, 7.064e10, 7.064e12, 3.532e15},
    {"steady", 100, 3.154e17, 7.064e12, 7.064e14, 3.532e19},
    {"mania", 10, 1.89e19, 1.962e9, 1.962e10, 9.810e11},
    {"optimistic", 10, 3.154e17, 7.064e12, 7.064e13, 3.532e16},
    {"steady", 10, 3.154e16, 7.064e14, 7.064e15, 3.532e20},
    {"mania", 1, 1.89e18, 1.962e11, 1.962e11, 9.810e12},
    {"optimistic", 1, 3.154e16, 7.064e14, 7.064e14, 3.532e17},
    {"steady", 1, 3.154e15, 7.064e16, 7.064e16, 3.532e21},
};

constexpr double kTableTolerance = 0.005;

}  // namespace

std::string format_exact(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::scientific);
  return std::string(buf, res.ptr);
}

std::string format_sig(double value, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::scientific,
                                 std::max(0, digits - 1));
  return std::string(buf, res.ptr);
}

std::vector<double> log_space(double lo, double hi, int points) {
  if (!(lo > 0.0 && lo < hi)) {
    throw std::invalid_argument("range must satisfy 0 < lo < hi");
  }
  if (points < 2) throw std::invalid_argument("need at least 2 points");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(points));
  const double log_lo = std::log(lo);
  const double step = (std::log(hi) - log_lo) / (points - 1);
  for (int i = 0; i < points; ++i) out.push_back(std::exp(log_lo + step * i));
  out.front() = lo;
  out.back() = hi;
  return out;
}

CostRow cost_row(const QuantumScenario& scenario, const CipherSpec& cipher,
                 double years) {
  return {scenario.name(), years, attack_plan(cipher, scenario, years)};
}

void write_cost_rows(std::ostream& out, std::span<const CostRow> rows,
                     Format format) {
  Grid grid({"scenario", "T_years", "t_layers", "k", "cost_ccy", "cost_usd"});
  for (const CostRow& r : rows) {
    grid.add({r.scenario, number(r.years, format),
              number(r.plan.layer_budget, format),
              number(r.plan.parallelism, format),
              number(r.plan.cost_ccy, format),
              number(r.plan.cost_usd, format)});
  }
  grid.write(out, format);
}

double GoldenCheck::rel_error() const {
  return std::abs(actual - expected) / std::abs(expected);
}

bool GoldenCheck::passed() const { return rel_error() <= tolerance; }

std::vector<GoldenCheck> reproduce(const ReproduceOptions& options) {
  const ScenarioConfig presets = preset_config();
  const auto scenario = [&](std::string_view name) {
    const QuantumScenario& s = presets.scenario(name);
    return QuantumScenario(s.name(),
                           s.gate_speed_hz() * options.layers_per_year_scale,
                           s.ccy_cost_usd());
  };
  const auto scaled = [&](std::string_view name) {
    const CipherSpec& c = presets.cipher(name);
    return CipherSpec(c.name(), c.key_bits(),
                      static_cast<std::uint64_t>(std::llround(
                          static_cast<double>(c.depth()) * options.depth_scale)),
                      c.width());
  };
  const CipherSpec aes = scaled("aes128-d57894");

  std::vector<GoldenCheck> checks;
  for (const TableCell& cell : kPublishedTables) {
    const AttackPlan plan = attack_plan(aes, scenario(cell.scenario),
                                        cell.years);
    const std::string prefix = std::string("table ") + cell.scenario + " " +
                               format_exact(cell.years) + "y ";
    checks.push_back({prefix + "t", cell.layers, plan.layer_budget,
                      kTableTolerance});
    checks.push_back({prefix + "k", cell.parallelism, plan.parallelism,
                      kTableTolerance});
    checks.push_back({prefix + "cost_ccy", cell.cost_ccy, plan.cost_ccy,
                      kTableTolerance});
    checks.push_back({prefix + "cost_usd", cell.cost_usd, plan.cost_usd,
                      kTableTolerance});
  }

  // Break-even value with the full value remaining, mania world.
  const QuantumScenario mania = scenario("mania");
  for (const auto& [years, expected] :
       {std::pair{100.0, 9.81e10}, {10.0, 9.81e11}, {1.0, 9.81e12}}) {
    checks.push_back({"min value " + format_exact(years) + "y delta_pow=1",
                      expected, min_profitable_value(aes, mania, years, 1.0),
                      0.005});
  }

  // Ten-fold shallower circuit: k and cost fall 100-fold.
  const AttackPlan mania100 = attack_plan(aes, mania, 100.0);
  checks.push_back(
      {"depth/10 mania 100y cost_usd", 9.8e8,
       depth_improvement_factor(mania100.parallelism, 0.1) * 100.0 *
           mania.ccy_cost_usd(),
       0.005});

  const CipherSpec aes_feas = scaled("aes128-d57854");
  const double alpha = family_coefficient(
      1e8, 100.0, 128, static_cast<double>(aes_feas.depth()));
  checks.push_back({"feasibility alpha (b=1e8, 100y)", 1.423e-42, alpha,
                    0.005});
  const RequiredSpeed speed = required_speed(alpha, 1000.0, 100.0);
  checks.push_back({"feasibility s_total at C_CCY=1000", 2.65e22,
                    speed.total_layers, 0.01});
  // A perturbed year length changes the clock rate behind a layer count.
  checks.push_back({"feasibility gate_hz at C_CCY=1000", 8.403e12,
                    speed.gate_hz / options.layers_per_year_scale, 0.01});

  const ClassicalRig rig;
  checks.push_back({"classical cost per guess", 5.43e-9,
                    published_cost_per_guess(rig), 0.002});
  checks.push_back({"classical expected cost AES-128", 9.24e29,
                    classical_expected_cost(rig, 128), 0.005});
  return checks;
}

bool write_golden_report(std::ostream& out, std::span<const GoldenCheck> checks,
                         Format format) {
  Grid grid({"check", "expected", "actual", "rel_error", "tolerance",
             "status"});
  bool all = true;
  for (const GoldenCheck& c : checks) {
    all = all && c.passed();
    grid.add({c.name, number(c.expected, format), number(c.actual, format),
              number(c.rel_error(), format), number(c.tolerance, format),
              c.passed() ? "PASS" : "FAIL"});
  }
  grid.write(out, format);
  if (format == Format::kTable) {
    const auto failed = std::count_if(checks.begin(), checks.end(),
                                      [](const auto& c) { return !c.passed(); });
    out << (all ? "all " : "") << checks.size() - failed << "/" << checks.size()
        << " checks passed\n";
  }
  return all;
}

std::vector<MinValuePoint> min_value_curve(const CipherSpec& cipher,
                                           const QuantumScenario& scenario,
                                           double years, double lo, double hi,
                                           int points) {
  if (!(hi <= 1.0)) {
    throw std::invalid_argument("remaining value fraction must be <= 1");
  }
  std::vector<MinValuePoint> curve;
  for (double f : log_space(lo, hi, points)) {
    curve.push_back({f, min_profitable_value(cipher, scenario, years, f)});
  }
  return curve;
}

void write_min_value_curve(std::ostream& out,
                           std::span<const MinValuePoint> curve,
                           Format format) {
  Grid grid({"delta_pow", "v_min_usd"});
  for (const auto& p : curve) {
    grid.add({number(p.remaining_fraction, format),
              number(p.min_value_usd, format)});
  }
  grid.write(out, format);
}

void write_feasibility_curve(std::ostream& out,
                             std::span<const TradeoffPoint> curve,
                             Format format) {
  Grid grid({"gate_hz", "max_ccy_usd"});
  for (const auto& p : curve) {
    grid.add({number(p.gate_hz, format), number(p.max_ccy_usd, format)});
  }
  grid.write(out, format);
}

void write_outcome(std::ostream& out, const ProfitOutcome& outcome,
                   Format format) {
  Grid grid({"candidate", "T_years", "profit_usd", "chosen"});
  bool marked = false;
  for (const ProfitCandidate& c : outcome.candidates) {
    const bool chosen =
        !marked && (outcome.attack_years
                        ? c.kind != CandidateKind::kNoAttack &&
                              c.time_years == *outcome.attack_years &&
                              c.profit_usd == outcome.profit_usd
                        : c.kind == CandidateKind::kNoAttack);
    marked = marked || chosen;
    grid.add({to_string(c.kind), number(c.time_years, format),
              number(c.profit_usd, format), chosen ? "yes" : "no"});
  }
  if (format == Format::kTable) {
    if (outcome.attack_years) {
      out << "decision: attack, finishing after "
          << format_sig(*outcome.attack_years) << " years, profit "
          << format_sig(outcome.profit_usd) << " USD\n";
    } else {
      out << "decision: no attack (no candidate has positive profit)\n";
    }
  }
  grid.write(out, format);
}

BatchReport batch_report(const BatchSpec& spec,
                         const QuantumScenario& scenario, double years) {
  return {spec.num_keys(),
          batch_oracle_depth(spec),
          attack_plan(spec.cipher(), scenario, years),
          batch_attack_plan(spec, scenario, years),
          batch_heuristic_cost(spec, scenario, years),
          batch_time_speedup(spec.num_keys())};
}

void write_batch(std::ostream& out, const BatchReport& r, Format format) {
  Grid grid({"num_keys", "oracle_depth", "k", "cost_ccy", "cost_usd",
             "sqrt_m_heuristic_usd", "single_key_cost_usd", "time_speedup"});
  grid.add({std::to_string(r.num_keys), number(r.oracle_depth, format),
            number(r.batch.parallelism, format),
            number(r.batch.cost_ccy, format), number(r.batch.cost_usd, format),
            number(r.heuristic_cost_usd, format),
            number(r.single_key.cost_usd, format),
            number(r.time_speedup, format)});
  grid.write(out, format);
  if (format == Format::kTable && r.batch.cost_usd > 0.0) {
    const double ratio = r.heuristic_cost_usd / r.batch.cost_usd;
    if (std::abs(std::log10(ratio)) > 0.01) {
      out << "note: the fixed-deadline formula (N/M search space, oracle depth "
          << format_sig(r.oracle_depth)
          << ") and the single-key/sqrt(M) heuristic differ by a factor of "
          << format_sig(ratio) << "\n";
    }
  }
}

void write_classical(std::ostream& out, const ClassicalRig& rig, int key_bits,
                     Format format) {
  Grid grid({"method", "cost_per_guess_usd", "expected_cost_usd"});
  grid.add({"published", number(published_cost_per_guess(rig), format),
            number(classical_expected_cost(rig, key_bits), format)});
  grid.add({"energy", number(energy_cost_per_guess(rig), format),
            number(classical_energy_cost(rig, key_bits), format)});
  grid.write(out, format);
  if (format == Format::kTable) {
    out << "published: power_kw * price_per_kwh * 3600 / guesses_per_sec\n"
        << "energy:    power_kw / guesses_per_sec / 3600 * price_per_kwh "
           "(kWh per guess times price)\n";
  }
}

}  // namespace qkr::report

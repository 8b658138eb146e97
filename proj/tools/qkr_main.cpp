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

// qkr: cost and profitability of quantum key-recovery attacks.
//
// Exit codes: 0 success, 1 invalid input or config, 2 a regression or
// verification check failed.

#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qkr/batch.hpp"
#include "qkr/classical.hpp"
#include "qkr/config.hpp"
#include "qkr/feasibility.hpp"
#include "qkr/grover.hpp"
#include "qkr/report.hpp"
#include "qkr/strategy.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitCheckFailed = 2;

struct Options {
  std::string config_path;
  qkr::report::Format format = qkr::report::Format::kTable;

  std::vector<std::string> scenarios;
  std::string cipher;
  std::vector<double> years;

  std::optional<double> value;
  std::optional<double> delta_pow;
  std::optional<double> threshold;
  std::optional<double> budget;
  std::uint64_t batch_m = 1;
  std::uint64_t seed = 1;
  std::uint64_t trials = 10000;

  std::string curve_kind;
  std::optional<double> lo;
  std::optional<double> hi;
  int points = 50;
  std::optional<double> ccy_target;

  double perturb_depth = 0.0;
  double perturb_year = 0.0;

  qkr::ClassicalRig rig;
  std::optional<int> key_bits;
};

qkr::ScenarioConfig load(const Options& opt) {
  qkr::ScenarioConfig config = opt.config_path.empty()
                                   ? qkr::preset_config()
                                   : qkr::load_config(opt.config_path);
  for (const std::string& w : config.warnings) {
    std::cerr << "warning: " << w << "\n";
  }
  return config;
}

const qkr::QuantumScenario& pick_scenario(const qkr::ScenarioConfig& config,
                                          const Options& opt) {
  return config.scenario(opt.scenarios.empty() ? config.default_scenario
                                               : opt.scenarios.front());
}

const qkr::CipherSpec& pick_cipher(const qkr::ScenarioConfig& config,
                                   const Options& opt) {
  return config.cipher(opt.cipher.empty() ? config.default_cipher
                                          : opt.cipher);
}

double single_years(const Options& opt, double fallback = 100.0) {
  return opt.years.empty() ? fallback : opt.years.front();
}

int run_cost(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  const qkr::CipherSpec& cipher = pick_cipher(config, opt);

  std::vector<std::string> names = opt.scenarios;
  if (names.empty()) names.push_back(config.default_scenario);
  if (names.size() == 1 && names.front() == "all") {
    names.clear();
    for (const auto& [name, _] : config.scenarios) names.push_back(name);
  }
  const std::vector<double> years =
      opt.years.empty() ? std::vector<double>{100.0} : opt.years;

  std::vector<qkr::report::CostRow> rows;
  for (double t : years) {
    for (const std::string& name : names) {
      rows.push_back(qkr::report::cost_row(config.scenario(name), cipher, t));
    }
  }
  qkr::report::write_cost_rows(std::cout, rows, opt.format);
  return kExitOk;
}

int run_reproduce(const Options& opt) {
  qkr::report::ReproduceOptions ro;
  ro.depth_scale = 1.0 + opt.perturb_depth;
  ro.layers_per_year_scale = 1.0 + opt.perturb_year;
  const auto checks = qkr::report::reproduce(ro);
  const bool ok =
      qkr::report::write_golden_report(std::cout, checks, opt.format);
  return ok ? kExitOk : kExitCheckFailed;
}

int run_curve(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  const qkr::CipherSpec& cipher = pick_cipher(config, opt);
  const double years = single_years(opt);
  if (opt.curve_kind == "min-value") {
    const auto curve = qkr::report::min_value_curve(
        cipher, pick_scenario(config, opt), years, opt.lo.value_or(0.01),
        opt.hi.value_or(1.0), opt.points);
    qkr::report::write_min_value_curve(std::cout, curve, opt.format);
  } else {
    const qkr::FeasibilityFamily family(opt.budget.value_or(1e8), years,
                                        cipher.key_bits(), cipher.depth());
    const auto curve = qkr::tradeoff_curve(family, opt.lo.value_or(1e10),
                                           opt.hi.value_or(1e50), opt.points);
    qkr::report::write_feasibility_curve(std::cout, curve, opt.format);
  }
  return kExitOk;
}

int run_feasible(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  const qkr::CipherSpec& cipher = pick_cipher(config, opt);
  const double years = single_years(opt);
  const double budget = opt.budget.value_or(1e8);
  const qkr::FeasibilityFamily family(budget, years, cipher.key_bits(),
                                      cipher.depth());
  const double target = opt.ccy_target.value_or(1000.0);
  const qkr::RequiredSpeed speed =
      qkr::required_speed(family.coefficient(), target, years);
  if (opt.format == qkr::report::Format::kCsv) {
    std::cout << "budget_usd,T_years,key_bits,depth,alpha,ccy_target_usd,"
                 "s_total_layers,gate_hz\n"
              << qkr::report::format_exact(budget) << ','
              << qkr::report::format_exact(years) << ','
              << std::to_string(cipher.key_bits()) << ','
              << std::to_string(cipher.depth()) << ','
              << qkr::report::format_exact(family.coefficient()) << ','
              << qkr::report::format_exact(target) << ','
              << qkr::report::format_exact(speed.total_layers) << ','
              << qkr::report::format_exact(speed.gate_hz) << '\n';
  } else {
    std::cout << "family: C_CCY <= "
              << qkr::report::format_sig(family.coefficient())
              << " * s_total^2 (s_total = layers within "
              << qkr::report::format_sig(years) << " years)\n"
              << "at C_CCY = " << qkr::report::format_sig(target)
              << " USD: s_total = "
              << qkr::report::format_sig(speed.total_layers)
              << " layers, gate speed = "
              << qkr::report::format_sig(speed.gate_hz) << " Hz\n";
  }
  return kExitOk;
}

int run_optimize(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  if (!opt.value) throw std::invalid_argument("--value is required");
  qkr::RewardModel model = qkr::ConstantReward{*opt.value};
  if (opt.delta_pow) {
    const double delta =
        qkr::delta_from_remaining(*opt.delta_pow, single_years(opt));
    model = qkr::DeltaReward{*opt.value, delta,
                             opt.threshold.value_or(qkr::kInfinity)};
  } else if (opt.threshold) {
    model = qkr::ThresholdReward{*opt.value, *opt.threshold};
  }
  const auto outcome = qkr::optimal_attack(pick_cipher(config, opt),
                                           pick_scenario(config, opt), model);
  qkr::report::write_outcome(std::cout, outcome, opt.format);
  return kExitOk;
}

int run_batch(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  const qkr::BatchSpec spec(opt.batch_m, pick_cipher(config, opt));
  qkr::report::write_batch(
      std::cout,
      qkr::report::batch_report(spec, pick_scenario(config, opt),
                                single_years(opt)),
      opt.format);
  return kExitOk;
}

int run_classical(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  const int bits = opt.key_bits.value_or(pick_cipher(config, opt).key_bits());
  qkr::report::write_classical(std::cout, opt.rig, bits, opt.format);
  return kExitOk;
}

int run_grover_verify(const Options& opt) {
  const auto checks = qkr::grover::run_verification_suite(opt.seed, opt.trials);
  bool ok = true;
  for (const auto& c : checks) {
    ok = ok && c.passed;
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << "\n";
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int run_list(const Options& opt) {
  const qkr::ScenarioConfig config = load(opt);
  std::cout << "scenarios (gate_speed_hz, ccy_cost_usd):\n";
  for (const auto& [name, s] : config.scenarios) {
    std::cout << "  " << name << (name == config.default_scenario ? " *" : "")
              << "  " << qkr::report::format_sig(s.gate_speed_hz()) << "  "
              << qkr::report::format_sig(s.ccy_cost_usd()) << "\n";
  }
  std::cout << "ciphers (key_bits, depth, width):\n";
  for (const auto& [name, c] : config.ciphers) {
    std::cout << "  " << name << (name == config.default_cipher ? " *" : "")
              << "  " << c.key_bits() << "  " << c.depth() << "  "
              << c.width() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Economics of quantum key-recovery attacks on ideal ciphers"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--config", opt.config_path, "Scenario/cipher config file")
      ->check(CLI::ExistingFile);
  const std::map<std::string, qkr::report::Format> formats{
      {"table", qkr::report::Format::kTable},
      {"csv", qkr::report::Format::kCsv}};
  app.add_option("--format", opt.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  const auto scenario_opt = [&](CLI::App* cmd, bool many) {
    auto* o = cmd->add_option("--scenario", opt.scenarios,
                              many ? "Scenario name(s), or 'all'"
                                   : "Scenario name");
    if (!many) o->expected(1);
  };
  const auto cipher_opt = [&](CLI::App* cmd) {
    cmd->add_option("--cipher", opt.cipher, "Cipher name");
  };
  const auto years_opt = [&](CLI::App* cmd, bool many) {
    auto* o = cmd->add_option("--years", opt.years, "Attack time in years")
                  ->check(CLI::PositiveNumber);
    if (!many) o->expected(1);
  };

  auto* cost = app.add_subcommand("cost", "Parallelism and cost of an attack");
  scenario_opt(cost, true);
  cipher_opt(cost);
  years_opt(cost, true);

  auto* reproduce =
      app.add_subcommand("reproduce", "Regress against the published figures");
  reproduce->add_option("--perturb-depth", opt.perturb_depth,
                        "Relative change applied to cipher depths");
  reproduce->add_option("--perturb-year", opt.perturb_year,
                        "Relative change applied to layers per year");

  auto* curve = app.add_subcommand("curve", "Emit a figure curve as rows");
  curve->add_option("--kind", opt.curve_kind, "min-value or feasibility")
      ->required()
      ->check(CLI::IsMember({"min-value", "feasibility"}));
  scenario_opt(curve, false);
  cipher_opt(curve);
  years_opt(curve, false);
  curve->add_option("--budget", opt.budget, "Attack budget in USD");
  curve->add_option("--lo", opt.lo, "Lower end of the sampled range");
  curve->add_option("--hi", opt.hi, "Upper end of the sampled range");
  curve->add_option("--points", opt.points, "Number of samples")
      ->check(CLI::Range(2, 1000000));

  auto* feasible = app.add_subcommand(
      "feasible", "Quantum computers able to attack within a budget");
  cipher_opt(feasible);
  years_opt(feasible, false);
  feasible->add_option("--budget", opt.budget, "Attack budget in USD")
      ->check(CLI::PositiveNumber);
  feasible->add_option("--ccy", opt.ccy_target, "Target CCY price in USD")
      ->check(CLI::PositiveNumber);

  auto* optimize =
      app.add_subcommand("optimize", "Attacker's profit-maximizing strategy");
  scenario_opt(optimize, false);
  cipher_opt(optimize);
  years_opt(optimize, false);
  optimize->add_option("--value", opt.value, "Initial value v0 in USD")
      ->required();
  optimize->add_option("--delta-pow", opt.delta_pow,
                       "Fraction of value left after --years (delta^T_y)");
  optimize->add_option("--threshold", opt.threshold,
                       "Years after which the information is worthless");

  auto* batch = app.add_subcommand("batch", "Recover any one of M keys");
  scenario_opt(batch, false);
  cipher_opt(batch);
  years_opt(batch, false);
  batch->add_option("--batch-m", opt.batch_m, "Number of keys M")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* classical =
      app.add_subcommand("classical", "Classical brute-force electricity cost");
  cipher_opt(classical);
  classical->add_option("--key-bits", opt.key_bits, "Key length in bits")
      ->check(CLI::PositiveNumber);
  classical->add_option("--guesses-per-sec", opt.rig.guesses_per_sec)
      ->check(CLI::PositiveNumber);
  classical->add_option("--power-kw", opt.rig.power_kw)
      ->check(CLI::PositiveNumber);
  classical->add_option("--price-per-kwh", opt.rig.price_per_kwh)
      ->check(CLI::PositiveNumber);

  auto* grover = app.add_subcommand(
      "grover-verify", "Check the Grover constants by simulation");
  grover->add_option("--seed", opt.seed, "Monte Carlo seed");
  grover->add_option("--trials", opt.trials, "Monte Carlo trials per config")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "Show configured scenarios/ciphers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (*cost) return run_cost(opt);
    if (*reproduce) return run_reproduce(opt);
    if (*curve) return run_curve(opt);
    if (*feasible) return run_feasible(opt);
    if (*optimize) return run_optimize(opt);
    if (*batch) return run_batch(opt);
    if (*classical) return run_classical(opt);
    if (*grover) return run_grover_verify(opt);
    if (*list) return run_list(opt);
  } catch (const qkr::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitInvalid;
}

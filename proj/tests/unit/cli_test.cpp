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

#include <sys/wait.h>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qkr/config.hpp"
#include "qkr/cost.hpp"
#include "qkr/report.hpp"
#include "qkr/strategy.hpp"

#ifdef QKR_CLI_PATH

namespace {

struct Run {
  int status;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run qkr_cli(const std::string& args) {
  const std::string command = std::string(QKR_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (const std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) {
    out.append(buf, n);
  }
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

double field(const std::string& csv, int row, int col) {
  std::istringstream in(csv);
  std::string line;
  for (int i = 0; i <= row; ++i) std::getline(in, line);
  std::istringstream ls(line);
  std::string cell;
  for (int i = 0; i <= col; ++i) std::getline(ls, cell, ',');
  double v = 0;
  std::from_chars(cell.data(), cell.data() + cell.size(), v);
  return v;
}

}  // namespace

TEST_CASE("cli cost row equals the library plan") {
  const auto run = qkr_cli("cost --scenario mania --years 100 --format csv");
  REQUIRE(run.status == 0);
  const auto config = qkr::preset_config();
  const auto plan = qkr::attack_plan(config.cipher("aes128-d57894"),
                                     config.scenario("mania"), 100);
  CHECK(field(run.out, 1, 2) == plan.layer_budget);
  CHECK(field(run.out, 1, 3) == plan.parallelism);
  CHECK(field(run.out, 1, 5) == plan.cost_usd);
}

TEST_CASE("cli cost over every scenario") {
  const auto run = qkr_cli("cost --scenario all --years 10 --format csv");
  REQUIRE(run.status == 0);
  CHECK(run.out.find("optimistic,1e+01,") != std::string::npos);
  CHECK(run.out.find("steady,1e+01,") != std::string::npos);
}

TEST_CASE("cli reproduce exit codes") {
  const auto ok = qkr_cli("reproduce");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const auto bad = qkr_cli("reproduce --perturb-depth 0.01");
  CHECK(bad.status == 2);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("cli min-value curve") {
  const auto run = qkr_cli("curve --kind min-value --years 100 --points 50 --format csv");
  REQUIRE(run.status == 0);
  CHECK(run.out.rfind("delta_pow,v_min_usd\n", 0) == 0);
  CHECK(field(run.out, 1, 0) == 0.01);
  CHECK(field(run.out, 1, 1) == doctest::Approx(9.81e12).epsilon(5e-3));
  const auto config = qkr::preset_config();
  CHECK(field(run.out, 50, 1) == qkr::attack_plan(config.cipher("aes128-d57894"),
                                                  config.scenario("mania"), 100)
                                     .cost_usd);
}

TEST_CASE("cli feasibility curve") {
  const auto run = qkr_cli(
      "curve --kind feasibility --cipher aes128-d57854 --budget 1e8 --years 100 "
      "--lo 8.403e12 --hi 1e13 --points 2 --format csv");
  REQUIRE(run.status == 0);
  CHECK(run.out.rfind("gate_hz,max_ccy_usd\n", 0) == 0);
  CHECK(field(run.out, 1, 0) == 8.403e12);
  CHECK(field(run.out, 1, 1) == doctest::Approx(1000).epsilon(1e-2));
}

TEST_CASE("cli optimize matches the library") {
  const auto run = qkr_cli("optimize --value 1e14 --delta-pow 0.5 --years 10 --format csv");
  REQUIRE(run.status == 0);
  const auto config = qkr::preset_config();
  const auto out = qkr::optimal_attack(
      config.cipher("aes128-d57894"), config.scenario("mania"),
      qkr::DeltaReward{1e14, qkr::delta_from_remaining(0.5, 10)});
  REQUIRE(out.attacks());
  CHECK(run.out.find(qkr::report::format_exact(*out.attack_years)) != std::string::npos);
  CHECK(run.out.find(qkr::report::format_exact(out.profit_usd)) != std::string::npos);
}

TEST_CASE("cli batch prints both costs") {
  const auto run = qkr_cli("batch --batch-m 1000000");
  REQUIRE(run.status == 0);
  CHECK(run.out.find("sqrt_m_heuristic_usd") != std::string::npos);
  CHECK(run.out.find("note:") != std::string::npos);
}

TEST_CASE("cli classical and grover-verify") {
  const auto classical = qkr_cli("classical --format csv");
  REQUIRE(classical.status == 0);
  CHECK(field(classical.out, 1, 2) == doctest::Approx(9.24e29).epsilon(5e-3));
  CHECK(classical.out.find("energy") != std::string::npos);
  const auto grover = qkr_cli("grover-verify --seed 5 --trials 2000");
  CHECK(grover.status == 0);
  CHECK(grover.out.find("FAIL") == std::string::npos);
}

TEST_CASE("cli input errors exit with 1") {
  CHECK(qkr_cli("cost --scenario atlantis").status == 1);
  CHECK(qkr_cli("cost --years -3").status == 1);
  CHECK(qkr_cli("cost --format xml").status == 1);
  CHECK(qkr_cli("curve --kind histogram").status == 1);
  CHECK(qkr_cli("optimize").status == 1);
  CHECK(qkr_cli("optimize --value 10 --delta-pow 2").status == 1);
  CHECK(qkr_cli("batch --batch-m 0").status == 1);
  CHECK(qkr_cli("").status == 1);
  CHECK(qkr_cli("--help").status == 0);
}

TEST_CASE("cli config loading") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto good = dir / "qkr_cli_good.conf";
  const auto bad = dir / "qkr_cli_bad.conf";
  {
    std::ofstream(good) << "[scenario mania]\ngate_speed_hz = 6e10\nccy_cost_usd = 60\n"
                           "[scenario lab]\ngate_speed_hz = 1e6\nccy_cost_usd = 1e6\n";
    std::ofstream(bad) << "[scenario lab]\ngate_speed_hz = 1e6\n";
  }
  const auto run = qkr_cli("--config " + good.string() + " cost --scenario lab --format csv");
  CHECK(run.status == 0);
  CHECK(run.out.find("warning:") != std::string::npos);
  CHECK(run.out.find("lab,") != std::string::npos);
  const auto after = qkr_cli("cost --config " + good.string() + " --scenario mania --format csv");
  CHECK(after.status == 0);
  const auto failed = qkr_cli("--config " + bad.string() + " cost");
  CHECK(failed.status == 1);
  CHECK(failed.out.find("ccy_cost_usd") != std::string::npos);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

#endif  // QKR_CLI_PATH

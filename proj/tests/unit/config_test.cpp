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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "qkr/config.hpp"

namespace {

qkr::ScenarioConfig parse(const std::string& text) {
  std::istringstream in(text);
  return qkr::parse_config(in, "test.conf");
}

// Returns the error raised while parsing `text`.
qkr::ConfigError parse_error(const std::string& text) {
  try {
    parse(text);
  } catch (const qkr::ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError for: " << text);
  return qkr::ConfigError(qkr::ConfigError::Kind::kParse, 0, "");
}

}  // namespace

TEST_CASE("presets are always available") {
  const auto c = qkr::preset_config();
  CHECK(c.scenario("mania").gate_speed_hz() == 6e10);
  CHECK(c.scenario("mania").ccy_cost_usd() == 50);
  CHECK(c.scenario("optimistic").gate_speed_hz() == 1e9);
  CHECK(c.scenario("optimistic").ccy_cost_usd() == 500);
  CHECK(c.scenario("steady").gate_speed_hz() == 1e8);
  CHECK(c.scenario("steady").ccy_cost_usd() == 50000);
  CHECK(c.cipher("aes128-d57894").depth() == 57894);
  CHECK(c.cipher("aes128-d57854").depth() == 57854);
  CHECK(c.cipher("aes128-grassl").depth() == 15000);
  CHECK(c.cipher("aes192").key_bits() == 192);
  CHECK(c.cipher("aes256").key_bits() == 256);
  CHECK(c.default_scenario == "mania");
  CHECK(c.default_cipher == "aes128-d57894");
  CHECK(c.warnings.empty());
}

TEST_CASE("empty input yields presets only") {
  const auto c = parse("");
  CHECK(c.scenarios.size() == 3);
  CHECK(c.ciphers.size() == 5);
  CHECK(parse("# only a comment\n\n   \n").scenarios.size() == 3);
}

TEST_CASE("user entries add to the presets") {
  const auto c = parse(
      "[scenario lab]\n"
      "gate_speed_hz = 1e6   # a slow machine\n"
      "ccy_cost_usd = 1e6\n"
      "\n"
      "[cipher toy]\n"
      "key_bits = 40\n"
      "depth = 100\n"
      "width = 64\n"
      "[defaults]\n"
      "scenario = lab\n"
      "cipher = toy\n");
  CHECK(c.scenarios.size() == 4);
  CHECK(c.scenario("lab").gate_speed_hz() == 1e6);
  CHECK(c.scenario("lab").ccy_cost_usd() == 1e6);
  CHECK(c.cipher("toy").width() == 64);
  CHECK(c.default_scenario == "lab");
  CHECK(c.default_cipher == "toy");
  CHECK(c.warnings.empty());
}

TEST_CASE("redefining a preset shadows it with a warning") {
  const auto c = parse("[scenario mania]\ngate_speed_hz = 6e10\nccy_cost_usd = 60\n");
  CHECK(c.scenario("mania").ccy_cost_usd() == 60);
  REQUIRE(c.warnings.size() == 1);
  CHECK(c.warnings[0].find("mania") != std::string::npos);
  CHECK(c.warnings[0].find("test.conf:1") != std::string::npos);
}

TEST_CASE("parse errors carry line numbers") {
  auto e = parse_error("[scenario lab]\ngate_speed_hz 5\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kParse);
  CHECK(e.line() == 2);
  CHECK(std::string(e.what()).find("test.conf:2") != std::string::npos);

  CHECK(parse_error("gate_speed_hz = 1\n").line() == 1);
  CHECK(parse_error("[scenario lab\n").line() == 1);
  CHECK(parse_error("[rocket x]\n").kind() == qkr::ConfigError::Kind::kParse);
  CHECK(parse_error("[scenario]\n").kind() == qkr::ConfigError::Kind::kParse);
  CHECK(parse_error("[scenario a]\ncolor = red\n").line() == 2);
  CHECK(parse_error("[scenario a]\ngate_speed_hz = 1\ngate_speed_hz = 2\n").line() == 3);
  e = parse_error("[scenario a]\ngate_speed_hz = fast\nccy_cost_usd = 1\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kParse);
  CHECK(e.line() == 2);
  CHECK(parse_error("[cipher c]\nkey_bits = 12.5\ndepth = 1\nwidth = 1\n").line() == 2);
}

TEST_CASE("validation errors name the field") {
  auto e = parse_error("[scenario lab]\ngate_speed_hz = 1e6\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kValidation);
  CHECK(std::string(e.what()).find("ccy_cost_usd") != std::string::npos);

  e = parse_error("[scenario lab]\ngate_speed_hz = -1\nccy_cost_usd = 1\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kValidation);
  CHECK(e.line() == 2);
  CHECK(std::string(e.what()).find("gate_speed_hz") != std::string::npos);

  e = parse_error("[scenario lab]\ngate_speed_hz = 1\nccy_cost_usd = inf\n");
  CHECK(std::string(e.what()).find("ccy_cost_usd") != std::string::npos);

  e = parse_error("[cipher c]\nkey_bits = 0\ndepth = 1\nwidth = 1\n");
  CHECK(std::string(e.what()).find("key_bits") != std::string::npos);
  e = parse_error("[cipher c]\nkey_bits = 8\ndepth = 0\nwidth = 1\n");
  CHECK(std::string(e.what()).find("depth") != std::string::npos);

  e = parse_error("[scenario a]\ngate_speed_hz = 1\nccy_cost_usd = 1\n"
                  "[scenario a]\ngate_speed_hz = 2\nccy_cost_usd = 2\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kValidation);
  CHECK(e.line() == 4);

  e = parse_error("[defaults]\nscenario = nowhere\n");
  CHECK(e.kind() == qkr::ConfigError::Kind::kValidation);
  CHECK(std::string(e.what()).find("nowhere") != std::string::npos);
}

TEST_CASE("unknown names") {
  const auto c = qkr::preset_config();
  CHECK_THROWS_AS(c.scenario("nope"), qkr::ConfigError);
  try {
    c.cipher("des");
  } catch (const qkr::ConfigError& e) {
    CHECK(e.kind() == qkr::ConfigError::Kind::kUnknownName);
  }
}

TEST_CASE("load_config reads files and reports missing ones") {
  const auto path =
      std::filesystem::temp_directory_path() / "qkr_config_test.conf";
  {
    std::ofstream out(path);
    out << "[scenario lab]\ngate_speed_hz = 1e6\nccy_cost_usd = 1e6\n";
  }
  const auto c = qkr::load_config(path);
  CHECK(c.scenario("lab").gate_speed_hz() == 1e6);
  std::filesystem::remove(path);
  CHECK_THROWS_AS(qkr::load_config(path), qkr::ConfigError);
}

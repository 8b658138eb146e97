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

#include "qkr/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <set>
#include <system_error>

namespace qkr {
namespace {

std::string located(std::string_view source, int line,
                    const std::string& message) {
  std::string out(source);
  if (line > 0) out += ":" + std::to_string(line);
  return out + ": " + message;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
std::optional<T> parse_number(std::string_view text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

enum class SectionKind { kNone, kScenario, kCipher, kDefaults };

// Key/value pairs gathered for one section before it is validated.
struct Section {
  SectionKind kind = SectionKind::kNone;
  std::string name;
  int line = 0;
  std::map<std::string, std::pair<std::string, int>, std::less<>> values;
};

class Parser {
 public:
  Parser(std::string_view source, ScenarioConfig& config)
      : source_(source), config_(config) {}

  void run(std::istream& in) {
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      std::string_view line = raw;
      if (const auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      line = trim(line);
      if (line.empty()) continue;
      if (line.front() == '[') {
        finish_section();
        open_section(line, line_no);
      } else {
        add_value(line, line_no);
      }
    }
    finish_section();
    check_defaults();
  }

 private:
  [[noreturn]] void fail(ConfigError::Kind kind, int line,
                         const std::string& message) const {
    throw ConfigError(kind, line, located(source_, line, message));
  }

  void open_section(std::string_view line, int line_no) {
    if (line.back() != ']') {
      fail(ConfigError::Kind::kParse, line_no, "unterminated section header");
    }
    const std::string_view body = trim(line.substr(1, line.size() - 2));
    const auto space = body.find_first_of(" \t");
    const std::string_view kind = body.substr(0, space);
    const std::string_view name =
        space == std::string_view::npos ? std::string_view{}
                                        : trim(body.substr(space));
    current_ = Section{};
    current_.line = line_no;
    current_.name = std::string(name);
    if (kind == "scenario" || kind == "cipher") {
      current_.kind =
          kind == "scenario" ? SectionKind::kScenario : SectionKind::kCipher;
      if (name.empty() || name.find_first_of(" \t") != std::string_view::npos) {
        fail(ConfigError::Kind::kParse, line_no,
             "section needs a single-word name: [" + std::string(kind) +
                 " NAME]");
      }
      auto& seen = current_.kind == SectionKind::kScenario ? scenario_names_
                                                           : cipher_names_;
      if (!seen.insert(current_.name).second) {
        fail(ConfigError::Kind::kValidation, line_no,
             "duplicate " + std::string(kind) + " name '" + current_.name +
                 "'");
      }
    } else if (kind == "defaults" && name.empty()) {
      current_.kind = SectionKind::kDefaults;
    } else {
      fail(ConfigError::Kind::kParse, line_no,
           "unknown section '[" + std::string(body) + "]'");
    }
  }

  void add_value(std::string_view line, int line_no) {
    if (current_.kind == SectionKind::kNone) {
      fail(ConfigError::Kind::kParse, line_no, "key outside of any section");
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      fail(ConfigError::Kind::kParse, line_no, "expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty() || value.empty()) {
      fail(ConfigError::Kind::kParse, line_no, "expected 'key = value'");
    }
    if (!allowed_keys().contains(key)) {
      fail(ConfigError::Kind::kParse, line_no, "unknown key '" + key + "'");
    }
    if (!current_.values.emplace(key, std::pair{value, line_no}).second) {
      fail(ConfigError::Kind::kParse, line_no, "duplicate key '" + key + "'");
    }
  }

  const std::set<std::string, std::less<>>& allowed_keys() const {
    static const std::set<std::string, std::less<>> scenario{"gate_speed_hz",
                                                             "ccy_cost_usd"};
    static const std::set<std::string, std::less<>> cipher{"key_bits", "depth",
                                                           "width"};
    static const std::set<std::string, std::less<>> defaults{"scenario",
                                                             "cipher"};
    switch (current_.kind) {
      case SectionKind::kScenario:
        return scenario;
      case SectionKind::kCipher:
        return cipher;
      default:
        return defaults;
    }
  }

  const std::pair<std::string, int>& require(std::string_view key) const {
    const auto it = current_.values.find(key);
    if (it == current_.values.end()) {
      fail(ConfigError::Kind::kValidation, current_.line,
           "missing field '" + std::string(key) + "' in '" + current_.name +
               "'");
    }
    return it->second;
  }

  template <typename T>
  T number(std::string_view key) const {
    const auto& [text, line] = require(key);
    const auto value = parse_number<T>(text);
    if (!value) {
      fail(ConfigError::Kind::kParse, line,
           "field '" + std::string(key) + "': cannot parse '" + text + "'");
    }
    return *value;
  }

  template <typename Map, typename Value>
  void merge(Map& map, const char* what, Value value) {
    // Names are unique within a file, so a replacement is always a preset.
    if (!map.insert_or_assign(current_.name, value).second) {
      config_.warnings.push_back(located(
          source_, current_.line,
          std::string(what) + " '" + current_.name +
              "' overrides the built-in preset"));
    }
  }

  void finish_section() {
    switch (current_.kind) {
      case SectionKind::kNone:
        return;
      case SectionKind::kScenario: {
        const double speed = number<double>("gate_speed_hz");
        const double cost = number<double>("ccy_cost_usd");
        if (!(speed > 0.0) || !std::isfinite(speed)) {
          fail(ConfigError::Kind::kValidation, require("gate_speed_hz").second,
               "field 'gate_speed_hz' must be finite and > 0");
        }
        if (!(cost > 0.0) || !std::isfinite(cost)) {
          fail(ConfigError::Kind::kValidation, require("ccy_cost_usd").second,
               "field 'ccy_cost_usd' must be finite and > 0");
        }
        merge(config_.scenarios, "scenario",
              QuantumScenario(current_.name, speed, cost));
        break;
      }
      case SectionKind::kCipher: {
        const long long bits = number<long long>("key_bits");
        const long long depth = number<long long>("depth");
        const long long width = number<long long>("width");
        if (bits < 1 || bits > 1000) {
          fail(ConfigError::Kind::kValidation, require("key_bits").second,
               "field 'key_bits' must lie in [1, 1000]");
        }
        if (depth < 1) {
          fail(ConfigError::Kind::kValidation, require("depth").second,
               "field 'depth' must be >= 1");
        }
        if (width < 1) {
          fail(ConfigError::Kind::kValidation, require("width").second,
               "field 'width' must be >= 1");
        }
        merge(config_.ciphers, "cipher",
              CipherSpec(current_.name, static_cast<int>(bits),
                         static_cast<std::uint64_t>(depth),
                         static_cast<std::uint64_t>(width)));
        break;
      }
      case SectionKind::kDefaults:
        if (const auto it = current_.values.find("scenario");
            it != current_.values.end()) {
          config_.default_scenario = it->second.first;
          defaults_line_ = it->second.second;
        }
        if (const auto it = current_.values.find("cipher");
            it != current_.values.end()) {
          config_.default_cipher = it->second.first;
          defaults_line_ = it->second.second;
        }
        break;
    }
    current_ = Section{};
  }

  void check_defaults() const {
    if (!config_.scenarios.contains(config_.default_scenario)) {
      fail(ConfigError::Kind::kValidation, defaults_line_,
           "field 'scenario': default scenario '" + config_.default_scenario +
               "' is not defined");
    }
    if (!config_.ciphers.contains(config_.default_cipher)) {
      fail(ConfigError::Kind::kValidation, defaults_line_,
           "field 'cipher': default cipher '" + config_.default_cipher +
               "' is not defined");
    }
  }

  std::string_view source_;
  ScenarioConfig& config_;
  Section current_;
  std::set<std::string> scenario_names_;
  std::set<std::string> cipher_names_;
  int defaults_line_ = 0;
};

}  // namespace

ConfigError::ConfigError(Kind kind, int line, const std::string& message)
    : std::runtime_error(message), kind_(kind), line_(line) {}

const QuantumScenario& ScenarioConfig::scenario(std::string_view name) const {
  const auto it = scenarios.find(name);
  if (it == scenarios.end()) {
    throw ConfigError(ConfigError::Kind::kUnknownName, 0,
                      "unknown scenario '" + std::string(name) + "'");
  }
  return it->second;
}

const CipherSpec& ScenarioConfig::cipher(std::string_view name) const {
  const auto it = ciphers.find(name);
  if (it == ciphers.end()) {
    throw ConfigError(ConfigError::Kind::kUnknownName, 0,
                      "unknown cipher '" + std::string(name) + "'");
  }
  return it->second;
}

ScenarioConfig preset_config() {
  ScenarioConfig config;
  const auto add_scenario = [&](const char* name, double hz, double usd) {
    config.scenarios.emplace(name, QuantumScenario(name, hz, usd));
  };
  add_scenario("mania", 6e10, 50.0);
  add_scenario("optimistic", 1e9, 500.0);
  add_scenario("steady", 1e8, 50000.0);

  const auto add_cipher = [&](const char* name, int bits, std::uint64_t depth,
                              std::uint64_t width) {
    config.ciphers.emplace(name, CipherSpec(name, bits, depth, width));
  };
  // Smallest published AES-128 Grover-oracle depth, as used in the cost
  // tables and minimum-value curves.
  add_cipher("aes128-d57894", 128, 57894, 1000);
  // The same circuit as quoted for the feasible-hardware family.
  add_cipher("aes128-d57854", 128, 57854, 1000);
  // Rough AES circuit (depth ~1.5e4, width ~1e3) quoted for batch attacks.
  add_cipher("aes128-grassl", 128, 15000, 1000);
  add_cipher("aes192", 192, 57894, 1000);
  add_cipher("aes256", 256, 57894, 1000);

  config.default_scenario = "mania";
  config.default_cipher = "aes128-d57894";
  return config;
}

ScenarioConfig parse_config(std::istream& in, std::string_view source) {
  ScenarioConfig config = preset_config();
  Parser parser(source, config);
  parser.run(in);
  return config;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError(ConfigError::Kind::kParse, 0,
                      "cannot open config file '" + path.string() + "'");
  }
  return parse_config(in, path.string());
}

}  // namespace qkr

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

// Named scenarios and ciphers.
//
// Config files are plain text, one `key = value` per line, grouped into
// sections; `#` starts a comment:
//
//   [scenario lab]
//   gate_speed_hz = 1e6
//   ccy_cost_usd = 1e6
//
//   [cipher toy64]
//   key_bits = 64
//   depth = 1000
//   width = 100
//
//   [defaults]
//   scenario = lab
//   cipher = toy64
//
// Every key is required in scenario and cipher sections. Entries are merged
// over the built-in presets; a file entry with a preset's name replaces the
// preset and records a warning.

#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qkr/model.hpp"

namespace qkr {

class ConfigError : public std::runtime_error {
 public:
  enum class Kind { kParse, kValidation, kUnknownName };

  ConfigError(Kind kind, int line, const std::string& message);

  Kind kind() const { return kind_; }
  /// 1-based line of the offending input, 0 when not tied to a line.
  int line() const { return line_; }

 private:
  Kind kind_;
  int line_;
};

struct ScenarioConfig {
  std::map<std::string, QuantumScenario, std::less<>> scenarios;
  std::map<std::string, CipherSpec, std::less<>> ciphers;
  std::string default_scenario;
  std::string default_cipher;
  std::vector<std::string> warnings;

  /// Throws ConfigError(kUnknownName) for a missing name.
  const QuantumScenario& scenario(std::string_view name) const;
  const CipherSpec& cipher(std::string_view name) const;
};

/// Built-in worlds (mania, optimistic, steady) and AES circuit presets.
ScenarioConfig preset_config();

/// Presets merged with the contents of `in`. `source` names the input in
/// error messages.
ScenarioConfig parse_config(std::istream& in, std::string_view source);

/// Throws ConfigError(kParse) if the file cannot be opened.
ScenarioConfig load_config(const std::filesystem::path& path);

}  // namespace qkr

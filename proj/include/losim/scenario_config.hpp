/*
 * Copyright 2026 The losim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "losim/sim.hpp"

namespace losim {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Names of the built-in presets, in listing order.
std::vector<std::string> preset_names();

/// Built-in preset by name; throws UnknownScenarioError.
Scenario preset(const std::string& name);

/// Load and strictly validate a JSON scenario file. Unknown keys, wrong
/// types, non-finite numbers, and out-of-range values all throw ConfigError.
/// A scenario entry may name a `preset` to seed defaults before overrides.
std::map<std::string, Scenario> load_config(const std::filesystem::path& path);

/// Scenario by name: config entries first (when a config is given), then
/// built-in presets. Throws UnknownScenarioError.
Scenario lookup_scenario(const std::map<std::string, Scenario>& config,
                         const std::string& name);

}  // namespace losim

/*
 * Copyright (C) 2026 The cavint Authors
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
 *
*/

#ifndef CAVINT__CLI__CONFIG_HPP
#define CAVINT__CLI__CONFIG_HPP

#include <cavint/sim.hpp>

#include "json.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace cavint::cli {

inline constexpr const char* tool_version = "0.1.0";
inline constexpr const char* config_env_var = "CAVINT_CONFIG";

struct ParetoSettings
{
  Turn boundary = Turn::Left;
  std::size_t grid_count = 50;
  double grid_lo = 1e-3;
  double grid_hi = 1.0 - 1e-3;
  /// Explicit grid; overrides count/lo/hi when present.
  std::optional<std::vector<double>> grid_values;

  std::vector<double> grid() const;
};

struct Config
{
  SimConfig sim;
  ParetoSettings pareto;
};

/// Parses a configuration document. Every key is optional; unknown keys and
/// invalid values raise ValidationError naming the dotted field path.
Config parse_config(const nlohmann::json& document);

/// Reads and parses a JSON configuration file.
Config load_config(const std::filesystem::path& path);

/// Resolves the configuration: explicit path, then the CAVINT_CONFIG
/// environment variable, then built-in defaults.
Config resolve_config(const std::optional<std::filesystem::path>& path);

/// Fully populated document describing the effective configuration.
nlohmann::json to_json(const Config& config);

/// FNV-1a 64-bit digest of the canonical (key-sorted, compact) dump.
std::string digest(const nlohmann::json& document);

} // namespace cavint::cli

#endif // CAVINT__CLI__CONFIG_HPP

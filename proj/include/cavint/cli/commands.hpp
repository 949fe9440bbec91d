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

#ifndef CAVINT__CLI__COMMANDS_HPP
#define CAVINT__CLI__COMMANDS_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

namespace cavint::cli {

enum ExitCode : int
{
  exit_ok = 0,
  exit_findings = 1,
  exit_usage = 2
};

struct SimulateOptions
{
  std::optional<std::filesystem::path> config;
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
};

struct ParetoOptions
{
  std::optional<std::filesystem::path> config;
  std::optional<std::string> boundary;   ///< left | straight | right
  std::optional<std::string> grid;       ///< comma separated weights
  std::optional<std::size_t> grid_count;
  std::optional<double> grid_lo;
  std::optional<double> grid_hi;
  std::filesystem::path out_dir = ".";
};

struct PlanOptions
{
  std::optional<std::filesystem::path> config;
  double t0 = 0.0;
  double v0 = 0.0;
  std::string arm = "W";
  std::string turn = "straight";
  double tm = 0.0;
  std::optional<double> tf;
  std::optional<double> vm;
  std::optional<double> vf;
  std::optional<std::string> objective;
  std::optional<double> w;
  std::filesystem::path out = "plan.csv";
};

/// Each command prints progress to out and diagnostics to err and returns an
/// ExitCode. Configuration problems are reported, not thrown.
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err);
int cmd_pareto(const ParetoOptions& options, std::ostream& out, std::ostream& err);
int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err);

} // namespace cavint::cli

#endif // CAVINT__CLI__COMMANDS_HPP

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

#include <cavint/cli/commands.hpp>
#include <cavint/cli/config.hpp>

#include "CLI11.hpp"

#include <iostream>

using namespace cavint::cli;

int main(int argc, char** argv)
{
  CLI::App app{"Signal-free intersection coordination: scheduling, trajectory planning, audit"};
  app.set_version_flag("--version", std::string(tool_version));
  app.require_subcommand(1);

  SimulateOptions sim;
  std::string sim_config;
  std::uint64_t seed = 0;
  auto* simulate = app.add_subcommand("simulate", "Run the randomized arrival simulation");
  simulate->add_option("-c,--config", sim_config,
    "JSON configuration (default: $CAVINT_CONFIG, then built-in)");
  auto* seed_opt = simulate->add_option("--seed", seed, "Override the configured seed");
  simulate->add_option("-o,--out", sim.out_dir, "Output directory")->capture_default_str();

  ParetoOptions par;
  std::string par_config, boundary, grid;
  std::size_t grid_count = 0;
  double grid_lo = 0.0, grid_hi = 0.0;
  auto* pareto = app.add_subcommand("pareto", "Sweep the fuel/jerk weight on one MZ boundary");
  pareto->add_option("-c,--config", par_config, "JSON configuration");
  auto* boundary_opt = pareto->add_option("-b,--boundary", boundary,
    "Boundary selector: left, straight or right");
  auto* grid_opt = pareto->add_option("--grid", grid, "Comma separated weights in (0, 1)");
  auto* count_opt = pareto->add_option("--grid-count", grid_count, "Number of log-odds grid points");
  auto* lo_opt = pareto->add_option("--grid-lo", grid_lo, "Smallest grid weight");
  auto* hi_opt = pareto->add_option("--grid-hi", grid_hi, "Largest grid weight");
  pareto->add_option("-o,--out", par.out_dir, "Output directory")->capture_default_str();

  PlanOptions plan;
  std::string plan_config, objective;
  double tf = 0.0, vm = 0.0, vf = 0.0, w = 0.0;
  auto* plan_cmd = app.add_subcommand("plan", "Plan a single vehicle through the CZ and MZ");
  plan_cmd->add_option("-c,--config", plan_config, "JSON configuration");
  plan_cmd->add_option("--t0", plan.t0, "CZ entry time [s]")->required();
  plan_cmd->add_option("--v0", plan.v0, "CZ entry speed [m/s]")->required();
  plan_cmd->add_option("--arm", plan.arm, "Entry arm: W, N, E or S")->capture_default_str();
  plan_cmd->add_option("--turn", plan.turn, "left, straight or right")->capture_default_str();
  plan_cmd->add_option("--tm", plan.tm, "Scheduled MZ entry time [s]")->required();
  auto* tf_opt = plan_cmd->add_option("--tf", tf, "MZ exit time [s] (default tm + turn time)");
  auto* vm_opt = plan_cmd->add_option("--vm", vm, "MZ entry speed [m/s]");
  auto* vf_opt = plan_cmd->add_option("--vf", vf, "MZ exit speed [m/s]");
  auto* obj_opt = plan_cmd->add_option("--objective", objective, "fuel, jerk or weighted");
  auto* w_opt = plan_cmd->add_option("--w", w, "Weight for the weighted objective");
  plan_cmd->add_option("-o,--out", plan.out, "Trajectory table")->capture_default_str();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError& e)
  {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  if (*simulate)
  {
    if (!sim_config.empty()) sim.config = sim_config;
    if (*seed_opt) sim.seed = seed;
    return cmd_simulate(sim, std::cout, std::cerr);
  }
  if (*pareto)
  {
    if (!par_config.empty()) par.config = par_config;
    if (*boundary_opt) par.boundary = boundary;
    if (*grid_opt) par.grid = grid;
    if (*count_opt) par.grid_count = grid_count;
    if (*lo_opt) par.grid_lo = grid_lo;
    if (*hi_opt) par.grid_hi = grid_hi;
    return cmd_pareto(par, std::cout, std::cerr);
  }

  if (!plan_config.empty()) plan.config = plan_config;
  if (*tf_opt) plan.tf = tf;
  if (*vm_opt) plan.vm = vm;
  if (*vf_opt) plan.vf = vf;
  if (*obj_opt) plan.objective = objective;
  if (*w_opt) plan.w = w;
  return cmd_plan(plan, std::cout, std::cerr);
}

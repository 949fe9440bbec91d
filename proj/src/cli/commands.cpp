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
#include <cavint/cli/writers.hpp>

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace cavint::cli {

namespace {

namespace fs = std::filesystem;

std::ofstream open_output(const fs::path& path)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  return out;
}

std::vector<double> parse_grid(const std::string& text)
{
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
  {
    std::size_t used = 0;
    double value = 0.0;
    try
    {
      value = std::stod(item, &used);
    }
    catch (const std::exception&)
    {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw ValidationError("grid", "cannot parse \"" + item + "\" as a number");
    out.push_back(value);
  }
  if (out.empty())
    throw ValidationError("grid", "must not be empty");
  return out;
}

template <typename Body>
int guarded(std::ostream& err, Body body)
{
  try
  {
    return body();
  }
  catch (const ValidationError& e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch (const PlanningError& e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  catch (const std::exception& e)
  {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

void print_feasibility(std::ostream& out, const FeasibilityReport& report)
{
  if (report.ok())
  {
    out << "feasibility: ok\n";
    return;
  }
  out << "feasibility: " << report.issues.size() << " issue(s)\n";
  for (const auto& i : report.issues)
  {
    out << fmt::format("  {} at t={} value={} limit={}\n", to_string(i.kind),
      format_number(i.time), format_number(i.value), format_number(i.limit));
  }
}

} // anonymous namespace

//==============================================================================
int cmd_simulate(const SimulateOptions& options, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&]
  {
    Config config = resolve_config(options.config);
    if (options.seed)
      config.sim.seed = *options.seed;

    const SimRun result = run(config.sim);

    fs::create_directories(options.out_dir);
    {
      auto f = open_output(options.out_dir / "trajectories.csv");
      write_trajectories(f, result.samples);
    }
    {
      auto f = open_output(options.out_dir / "schedule.csv");
      write_schedule(f, result.vehicles);
    }
    write_json(options.out_dir / "audit.json", audit_document(result));

    RunManifest manifest{
      "simulate", digest(to_json(config)), config.sim.seed, tool_version,
      {"trajectories.csv", "schedule.csv", "audit.json", "manifest.json"}};
    write_json(options.out_dir / "manifest.json", manifest_document(manifest));

    const auto h = result.binding_histogram();
    out << fmt::format("vehicles: {}\n", result.vehicles.size());
    out << fmt::format("binding cases: e={} s={} l={} o={} c={}\n",
      h[0], h[1], h[2], h[3], h[4]);
    out << fmt::format("audit findings: {}\n", result.audit.findings.size());
    for (const auto& f : result.audit.findings)
    {
      out << fmt::format("  {} id={} other={} t={} value={} limit={}\n",
        to_string(f.kind), f.id, f.other, format_number(f.time),
        format_number(f.value), format_number(f.limit));
    }
    return result.audit.clean() ? exit_ok : exit_findings;
  });
}

//==============================================================================
int cmd_pareto(const ParetoOptions& options, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&]
  {
    Config config = resolve_config(options.config);
    auto& p = config.pareto;

    if (options.boundary)
    {
      const auto turn = parse_turn(*options.boundary);
      if (!turn)
        throw ValidationError("boundary", "expected left, straight or right");
      p.boundary = *turn;
    }
    if (options.grid)
      p.grid_values = parse_grid(*options.grid);
    if (options.grid_count || options.grid_lo || options.grid_hi)
    {
      if (options.grid)
        throw ValidationError("grid", "cannot be combined with grid-count/lo/hi");
      p.grid_values.reset();
      if (options.grid_count) p.grid_count = *options.grid_count;
      if (options.grid_lo) p.grid_lo = *options.grid_lo;
      if (options.grid_hi) p.grid_hi = *options.grid_hi;
    }

    const auto& g = config.sim.geometry;
    const Movement movement{Arm::West, p.boundary};
    MzBoundary b;
    b.tm = 0.0;
    b.tf = turn_time(movement, g);
    b.vm = mz_exit_speed(movement, g);
    b.vf = b.vm;
    b.p_start = g.cz_length;
    b.p_end = g.cz_length + path_length(movement, g);

    const WeightedParameters q = config.sim.mz.parameters(g);
    const std::vector<double> grid = p.grid();
    const ParetoRun result = sweep(b, grid, q.q1, q.q2);

    fs::create_directories(options.out_dir);
    {
      auto f = open_output(options.out_dir / "pareto.csv");
      write_pareto(f, result);
    }
    RunManifest manifest{
      "pareto", digest(to_json(config)), config.sim.seed, tool_version,
      {"pareto.csv", "manifest.json"}};
    write_json(options.out_dir / "manifest.json", manifest_document(manifest));

    out << fmt::format("boundary: {} ({} points, {} on frontier)\n",
      to_string(p.boundary), result.points.size(), result.frontier.size());
    return exit_ok;
  });
}

//==============================================================================
int cmd_plan(const PlanOptions& options, std::ostream& out, std::ostream& err)
{
  return guarded(err, [&]
  {
    Config config = resolve_config(options.config);
    const auto& g = config.sim.geometry;

    const auto arm = parse_arm(options.arm);
    if (!arm)
      throw ValidationError("arm", "expected W, N, E or S");
    const auto turn = parse_turn(options.turn);
    if (!turn)
      throw ValidationError("turn", "expected left, straight or right");
    if (options.objective)
    {
      const auto o = parse_objective(*options.objective);
      if (!o)
        throw ValidationError("objective", "expected fuel, jerk or weighted");
      config.sim.mz.objective = *o;
    }
    if (options.w)
      config.sim.mz.w = *options.w;
    config.sim.validate();

    if (!std::isfinite(options.t0))
      throw ValidationError("t0", "must be finite");
    if (!(options.v0 >= g.v_min && options.v0 <= g.v_max))
      throw ValidationError("v0", "must lie in [v_min, v_max]");
    if (options.tm <= options.t0)
      throw ValidationError("tm", "infeasible window: tm must exceed t0");

    const Movement movement{*arm, *turn};
    const VehicleSpec spec{1, options.t0, options.v0, movement};

    Schedule s;
    s.id = 1;
    s.movement = movement;
    s.t0 = options.t0;
    s.v0 = options.v0;
    s.turn_time = turn_time(movement, g);
    s.feasibility_bound = feasibility_bound(spec, g);
    s.tm = options.tm;
    s.tf = options.tf.value_or(options.tm + s.turn_time);
    s.vm = options.vm.value_or(mz_exit_speed(movement, g));
    s.vf = options.vf.value_or(s.vm);
    s.binding = BindingCase::NoConflict;

    if (s.tm < s.feasibility_bound)
    {
      err << fmt::format(
        "warning: tm={} is earlier than the feasibility bound t_c={}; "
        "planning at the bound\n",
        format_number(s.tm), format_number(s.feasibility_bound));
      const double shift = s.feasibility_bound - s.tm;
      s.tm += shift;
      s.tf += shift;
      s.binding = BindingCase::Feasibility;
    }
    if (s.tf <= s.tm)
      throw ValidationError("tf", "must exceed tm");

    const VehicleRecord r = plan_vehicle(spec, s, config.sim, nullptr);
    const WeightedParameters q = config.sim.mz.parameters(g);
    const MzCosts mz = mz_costs(r.mz, q.q1, q.q2);
    const MzCoefficients& k = r.mz.coefficients();

    out << fmt::format("movement: {} {}\n", to_string(movement.entry), to_string(movement.turn));
    out << fmt::format("window: t0={} tm={} tf={} t_c={}\n", format_number(s.t0),
      format_number(s.tm), format_number(s.tf), format_number(s.feasibility_bound));
    out << fmt::format("cz: a={} b={} c={} d={} (tau = t - t0, cond {})\n",
      format_number(r.cz.a), format_number(r.cz.b), format_number(r.cz.c),
      format_number(r.cz.d), format_number(r.cz.condition));
    out << fmt::format("mz {}: a={} b={} c={} d={} e={} f={}",
      to_string(r.mz.objective()), format_number(k.a), format_number(k.b),
      format_number(k.c), format_number(k.d), format_number(k.e), format_number(k.f));
    if (r.mz.objective() == MzObjective::Weighted)
      out << fmt::format(" A1={} A2={}", format_number(k.rate_a1), format_number(k.rate_a2));
    out << " (tau = t - tm)\n";
    out << fmt::format("cost: cz={} mz_fuel={} mz_discomfort={} mz_weighted={}\n",
      format_number(cz_cost(r.cz)), format_number(mz.fuel),
      format_number(mz.discomfort), format_number(mz.weighted));
    print_feasibility(out, r.feasibility);

    if (options.out.has_parent_path())
      fs::create_directories(options.out.parent_path());
    auto f = open_output(options.out);
    const std::vector<VehicleRecord> one{r};
    write_trajectories(f, sample_states_serial(one, config.sim.sample_step));
    return exit_ok;
  });
}

} // namespace cavint::cli

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

#include <cavint/cz_planner.hpp>
#include <cavint/mz_planner.hpp>
#include <cavint/pareto.hpp>
#include <cavint/scheduler.hpp>
#include <cavint/sim.hpp>
#include <cavint/cli/writers.hpp>

#include "oracles.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace cavint;

namespace {

constexpr int seed_count = 20;

struct Outcome
{
  bool pass = false;
  std::string detail;
};

SimConfig reference_config(std::uint64_t seed)
{
  SimConfig c;
  c.geometry = IntersectionGeometry::reference();
  c.arrival_rate = 1.0;
  c.speed_lo = 10.0;
  c.speed_hi = 12.0;
  c.vehicle_count = 30;
  c.seed = seed;
  return c;
}

double rel(double a, double b)
{
  return std::abs(a - b) / std::max(std::abs(b), 1e-300);
}

MzBoundary turn_boundary(Turn turn, const IntersectionGeometry& g)
{
  const Movement m{Arm::West, turn};
  MzBoundary b;
  b.tm = 0.0;
  b.tf = turn_time(m, g);
  b.vm = b.vf = mz_exit_speed(m, g);
  b.p_start = g.cz_length;
  b.p_end = g.cz_length + path_length(m, g);
  return b;
}

oracle::Endpoints endpoints(const MzBoundary& b)
{
  return {b.duration(), b.p_start, b.vm, b.u_start, b.p_end, b.vf, b.u_end};
}

//==============================================================================
Outcome scenario_runs(std::vector<SimRun>& runs)
{
  double slowest = 0.0;
  std::size_t findings = 0;
  for (int seed = 1; seed <= seed_count; ++seed)
  {
    const auto start = std::chrono::steady_clock::now();
    runs.push_back(run(reference_config(static_cast<std::uint64_t>(seed))));
    const std::chrono::duration<double> took = std::chrono::steady_clock::now() - start;
    slowest = std::max(slowest, took.count());
    findings += runs.back().audit.findings.size();
    if (runs.back().vehicles.size() != 30)
      return {false, fmt::format("seed {} planned {} vehicles", seed, runs.back().vehicles.size())};
  }
  return {findings == 0 && slowest < 5.0,
    fmt::format("{} seeds, {} findings, slowest run {:.3f} s", seed_count, findings, slowest)};
}

Outcome binding_cases(const std::vector<SimRun>& runs)
{
  std::array<int, 5> total{};
  for (const auto& r : runs)
  {
    const auto h = r.binding_histogram();
    for (std::size_t i = 0; i < h.size(); ++i)
      total[i] += h[i];
  }
  const bool all = total[0] > 0 && total[1] > 0 && total[2] > 0 && total[3] > 0;
  return {all, fmt::format("histogram e={} s={} l={} o={} c={}",
    total[0], total[1], total[2], total[3], total[4])};
}

Outcome cz_versus_transcription()
{
  std::mt19937_64 rng(303);
  std::uniform_real_distribution<double> v(6.0, 13.0), T(30.0, 55.0), t0(0.0, 2000.0);
  double worst_cost = 0.0, worst_residual = 0.0;
  for (int k = 0; k < 10; ++k)
  {
    const double a = t0(rng), v0 = v(rng), vm = v(rng), d = T(rng);
    const auto tr = solve_cz(a, v0, a + d, vm, 400.0);
    worst_residual = std::max({worst_residual,
      std::abs(tr.position(a)), std::abs(tr.speed(a) - v0),
      std::abs(tr.position(a + d) - 400.0), std::abs(tr.speed(a + d) - vm)});
    const auto dt = oracle::fuel_transcription({d, 0.0, v0, 0.0, 400.0, vm, 0.0}, 800);
    worst_cost = std::max(worst_cost, rel(cz_cost(tr), dt.fuel));
  }
  return {worst_cost <= 1e-4 && worst_residual < 1e-9,
    fmt::format("cost rel err {:.2e}, residual {:.2e}", worst_cost, worst_residual)};
}

Outcome mz_jerk_versus_qp()
{
  const auto g = IntersectionGeometry::reference();
  std::vector<MzBoundary> cases;
  for (const Turn t : {Turn::Left, Turn::Straight, Turn::Right})
    cases.push_back(turn_boundary(t, g));

  std::mt19937_64 rng(404);
  std::uniform_real_distribution<double> v(5.0, 12.0), acc(-1.5, 1.5);
  const std::array<Turn, 3> turns{Turn::Left, Turn::Straight, Turn::Right};
  while (cases.size() < 10)
  {
    MzBoundary b = turn_boundary(turns[cases.size() % 3], g);
    b.vm = v(rng);
    b.vf = v(rng);
    b.u_start = acc(rng);
    cases.push_back(b);
  }

  double worst = 0.0;
  for (std::size_t i = 0; i < cases.size(); ++i)
  {
    const auto tr = solve_mz_jerk(cases[i]);
    const double c = mz_costs(tr, 1.0, 1.0).discomfort;
    const auto qp = oracle::jerk_qp(endpoints(cases[i]), 0.0, 1.0, 800);
    if (c > 1e-12)
      worst = std::max(worst, rel(c, qp.discomfort));
    else
      worst = std::max(worst, qp.discomfort);
  }
  const double straight = mz_costs(solve_mz_jerk(cases[1]), 1.0, 1.0).discomfort;
  return {worst <= 1e-3 && straight < 1e-12,
    fmt::format("cost rel err {:.2e}, straight discomfort {:.2e}", worst, straight)};
}

Outcome weighted_solver()
{
  const auto g = IntersectionGeometry::reference();
  const auto b = turn_boundary(Turn::Left, g);
  const double q1 = 1.0 / (g.u_max * g.u_max), q2 = 0.01;

  double el = 0.0;
  for (const double w : {1e-3, 0.1, 0.5, 0.9, 0.999})
  {
    const auto tr = solve_mz_weighted(b, {w, q1, q2});
    const auto k = tr.coefficients();
    for (int i = 0; i <= 1000; ++i)
    {
      const double tau = b.duration() * i / 1000.0;
      const double r = (1.0 - w) * q2 * tr.derivative(b.tm + tau, 4)
        - w * q1 * tr.control(b.tm + tau) + (k.a * tau + k.b);
      el = std::max(el, std::abs(r));
    }
  }

  const auto jerk = solve_mz_jerk(b);
  const auto small = solve_mz_weighted(b, {1e-6, q1, q2});
  double sup = 0.0;
  for (int i = 0; i <= 1000; ++i)
  {
    const double t = b.tm + b.duration() * i / 1000.0;
    sup = std::max(sup, std::abs(small.control(t) - jerk.control(t)));
  }

  const auto grid = default_weight_grid(50);
  const auto s = sweep(b, grid, q1, q2);
  double excess = 0.0;
  for (const auto& own : s.points)
  {
    const double J = combine_costs(own.fuel, own.discomfort, own.w, q1, q2);
    for (const auto& other : s.points)
      excess = std::max(excess, J - combine_costs(other.fuel, other.discomfort, own.w, q1, q2));
  }

  return {el < 1e-6 && sup < 1e-2 && excess <= 1e-9,
    fmt::format("EL residual {:.2e}, sup|u - u_jerk| {:.2e} at w=1e-6, cross-eval excess {:.2e}",
      el, sup, excess)};
}

Outcome pareto_monotone()
{
  const auto g = IntersectionGeometry::reference();
  const auto b = turn_boundary(Turn::Left, g);
  const auto grid = default_weight_grid(50);
  const auto s = sweep(b, grid, 1.0 / (g.u_max * g.u_max), 0.01);
  double fuel_rise = 0.0, comfort_drop = 0.0;
  for (std::size_t i = 1; i < s.points.size(); ++i)
  {
    fuel_rise = std::max(fuel_rise, s.points[i].fuel - s.points[i - 1].fuel);
    comfort_drop = std::max(comfort_drop, s.points[i - 1].discomfort - s.points[i].discomfort);
  }
  return {fuel_rise <= 1e-9 && comfort_drop <= 1e-9,
    fmt::format("fuel {:.6g} -> {:.6g}, discomfort {:.6g} -> {:.6g}, worst reversal {:.2e}",
      s.points.front().fuel, s.points.back().fuel,
      s.points.front().discomfort, s.points.back().discomfort,
      std::max(fuel_rise, comfort_drop))};
}

Outcome feasibility_bound_oracle()
{
  std::mt19937_64 rng(707);
  std::uniform_real_distribution<double> v0(0.5, 20.0), L(50.0, 800.0), vmax(5.0, 30.0), umax(0.5, 4.0);
  double worst = 0.0;
  int mismatched = 0, capped = 0;
  for (int k = 0; k < 100; ++k)
  {
    const double vm = vmax(rng);
    const double v = std::min(v0(rng), vm);
    const double len = L(rng), u = umax(rng);
    const double t = feasibility_bound(0.0, v, len, vm, u);
    const auto fwd = oracle::forward_arrival(v, len, vm, u);
    worst = std::max(worst, std::abs(t - fwd.time));
    const bool selects_cruise = (vm * vm - v * v) / (2.0 * u) < len;
    mismatched += selects_cruise != fwd.reached_v_max;
    capped += fwd.reached_v_max;
  }
  return {worst <= 1e-9 && mismatched == 0,
    fmt::format("max |dt| {:.2e} s, {} of 100 reach v_max, {} selection mismatches",
      worst, capped, mismatched)};
}

std::string tables(const SimRun& r)
{
  std::ostringstream out;
  cli::write_trajectories(out, r.samples);
  cli::write_schedule(out, r.vehicles);
  out << cli::audit_document(r).dump(2);
  return out.str();
}

Outcome determinism(const std::vector<SimRun>& runs)
{
  int differing = 0;
  for (int seed = 1; seed <= seed_count; ++seed)
  {
    const auto again = run(reference_config(static_cast<std::uint64_t>(seed)));
    differing += tables(again) != tables(runs[static_cast<std::size_t>(seed - 1)]);
  }
  return {differing == 0, fmt::format("{} of {} reruns differ", differing, seed_count)};
}

Outcome fault_injection(const std::vector<SimRun>& runs)
{
  int tried = 0, missed = 0;
  for (const auto& base : runs)
  {
    for (const auto& v : base.vehicles)
    {
      ++tried;
      missed += perturb_schedule(base, v.spec.id, -0.5).audit.clean();
    }
  }
  return {tried > 0 && missed == 0,
    fmt::format("{} perturbations, {} undetected", tried, missed)};
}

} // anonymous namespace

int main()
{
  std::vector<SimRun> runs;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
    {"1 reference scenario audits clean", [&] { return scenario_runs(runs); }},
    {"2 all four binding cases occur", [&] { return binding_cases(runs); }},
    {"3 CZ solver vs transcription", cz_versus_transcription},
    {"4 MZ jerk solver vs QP", mz_jerk_versus_qp},
    {"5 weighted solver", weighted_solver},
    {"6 Pareto sweep monotone", pareto_monotone},
    {"7 feasibility bound vs forward integration", feasibility_bound_oracle},
    {"8 determinism", [&] { return determinism(runs); }},
    {"9 fault injection", [&] { return fault_injection(runs); }}};

  int failed = 0;
  for (const auto& [name, check] : criteria)
  {
    Outcome o;
    try
    {
      o = check();
    }
    catch (const std::exception& e)
    {
      o = {false, std::string("exception: ") + e.what()};
    }
    failed += !o.pass;
    fmt::print("[{}] {}: {}\n", o.pass ? "PASS" : "FAIL", name, o.detail);
  }
  return failed == 0 ? 0 : 1;
}

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

#include <cavint/sim.hpp>

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <random>
#include <string>

namespace cavint {

namespace {

void require(bool condition, const char* field, const std::string& what)
{
  if (!condition)
    throw ValidationError(field, what);
}

template <std::size_t N>
void require_distribution(const std::array<double, N>& weights, const char* field)
{
  for (const double w : weights)
    require(std::isfinite(w) && w >= 0.0, field, "entries must be non-negative");
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  require(std::abs(sum - 1.0) <= 1e-9, field, "entries must sum to 1");
}

// Smallest same-lane gap over [from, to] against the leader, sampled every
// step. Times where the leader has already left are skipped.
double min_lane_gap(
  const VehicleRecord& follower,
  const VehicleRecord& leader,
  double from,
  double to,
  double step)
{
  double gap = std::numeric_limits<double>::infinity();
  const auto n = static_cast<long>(std::ceil((to - from) / step));
  for (long k = 0; k <= n; ++k)
  {
    const double t = std::min(from + static_cast<double>(k) * step, to);
    if (t >= leader.exit_end)
      break;
    gap = std::min(gap, leader.state_at(t).p - follower.cz.position(t));
  }
  return gap;
}

struct Candidate
{
  double t0;
  Schedule schedule;
  VehicleRecord record;
};

// Earliest admission time at or after `ready` for which the planned CZ motion
// keeps the safe distance to the lane leader.
Candidate admit(
  const Arrival& arrival,
  double ready,
  int id,
  const QueueState& queue,
  const VehicleRecord* leader,
  const SimConfig& config)
{
  const auto& g = config.geometry;
  const double needed = g.min_safe_distance + config.admission_margin;
  constexpr int max_attempts = 100000;

  double t0 = ready;
  for (int attempt = 0; attempt < max_attempts; ++attempt)
  {
    const VehicleSpec spec{id, t0, arrival.speed, arrival.movement};
    Schedule s = schedule(spec, queue, g);
    VehicleRecord record = plan_vehicle(spec, s, config, leader);
    record.arrival_time = arrival.time;

    if (!leader
      || min_lane_gap(record, *leader, t0, s.tm, config.admission_step) >= needed)
      return Candidate{t0, std::move(s), std::move(record)};

    t0 = ready + static_cast<double>(attempt + 1) * config.admission_step;
  }

  throw PlanningError(
    "arrival " + std::to_string(arrival.index)
    + " could not be admitted behind its lane leader");
}

} // anonymous namespace

//==============================================================================
WeightedParameters MzPolicy::parameters(const IntersectionGeometry& geometry) const
{
  return WeightedParameters{
    w,
    1.0 / (geometry.u_max * geometry.u_max),
    1.0 / (jerk_scale * jerk_scale)};
}

//==============================================================================
void SimConfig::validate() const
{
  geometry.validate();
  require(std::isfinite(arrival_rate) && arrival_rate > 0.0,
    "arrival_rate", "must be positive");
  require(speed_lo <= speed_hi, "speed_lo", "must not exceed speed_hi");
  require(speed_lo >= geometry.v_min && speed_lo <= geometry.v_max,
    "speed_lo", "must lie in [v_min, v_max]");
  require(speed_hi >= geometry.v_min && speed_hi <= geometry.v_max,
    "speed_hi", "must lie in [v_min, v_max]");
  require(speed_lo > 0.0, "speed_lo", "must be positive");
  require_distribution(turn_weights, "turn_weights");
  require_distribution(arm_weights, "arm_weights");
  require(vehicle_count >= 1, "vehicle_count", "must be at least 1");
  require(sample_step > 0.0, "sample_step", "must be positive");
  require(admission_margin >= 0.0, "admission_margin", "must not be negative");
  require(admission_step > 0.0, "admission_step", "must be positive");
  require(tolerances.gap >= 0.0, "tolerances.gap", "must not be negative");
  require(tolerances.time >= 0.0, "tolerances.time", "must not be negative");
  require(mz.jerk_scale > 0.0, "mz.jerk_scale", "must be positive");
  require(mz.exponent_cap > 0.0, "mz.exponent_cap", "must be positive");
  if (mz.objective == MzObjective::Weighted)
    require(mz.w > 0.0 && mz.w < 1.0, "mz.w",
      "must lie in (0, 1); use the fuel or jerk objective for the end points");
}

//==============================================================================
std::vector<Arrival> generate_arrival_stream(const SimConfig& config)
{
  config.validate();

  std::mt19937_64 rng(config.seed);
  std::exponential_distribution<double> gap(config.arrival_rate);
  std::uniform_real_distribution<double> speed(config.speed_lo, config.speed_hi);
  std::discrete_distribution<int> arm(
    config.arm_weights.begin(), config.arm_weights.end());
  std::discrete_distribution<int> turn(
    config.turn_weights.begin(), config.turn_weights.end());

  std::vector<Arrival> out;
  out.reserve(static_cast<std::size_t>(config.vehicle_count));
  double t = 0.0;
  for (int i = 0; i < config.vehicle_count; ++i)
  {
    Arrival a;
    t += gap(rng);
    a.time = t;
    a.speed = config.speed_lo < config.speed_hi ? speed(rng) : config.speed_lo;
    a.movement.entry = static_cast<Arm>(arm(rng));
    a.movement.turn = static_cast<Turn>(turn(rng));
    a.tie_break = rng();
    out.push_back(a);
  }

  std::stable_sort(out.begin(), out.end(),
    [](const Arrival& a, const Arrival& b)
    {
      if (a.time != b.time)
        return a.time < b.time;
      return a.tie_break < b.tie_break;
    });
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i].index = static_cast<int>(i) + 1;
  return out;
}

//==============================================================================
std::vector<VehicleSpec> generate_arrivals(const SimConfig& config)
{
  std::vector<VehicleSpec> out;
  for (const auto& a : generate_arrival_stream(config))
    out.push_back(VehicleSpec{a.index, a.time, a.speed, a.movement});
  return out;
}

//==============================================================================
std::string_view to_string(Zone zone)
{
  switch (zone)
  {
    case Zone::Control: return "CZ";
    case Zone::Merging: return "MZ";
    case Zone::Exit: return "EXIT";
  }
  return "?";
}

//==============================================================================
KinematicState VehicleRecord::state_at(double t) const
{
  if (t < schedule.tm)
    return {Zone::Control, cz.position(t), cz.speed(t), cz.control(t), cz.jerk(t)};
  if (t < schedule.tf)
    return {Zone::Merging, mz.position(t), mz.speed(t), mz.control(t), mz.jerk(t)};
  const double vf = schedule.vf;
  return {Zone::Exit, exit_position + vf * (t - schedule.tf), vf, 0.0, 0.0};
}

//==============================================================================
VehicleRecord plan_vehicle(
  const VehicleSpec& spec,
  const Schedule& schedule,
  const SimConfig& config,
  const VehicleRecord* lane_leader)
{
  const auto& g = config.geometry;

  VehicleRecord r;
  r.spec = spec;
  r.arrival_time = spec.t0;
  r.schedule = schedule;
  r.cz = solve_cz(spec.t0, spec.v0, schedule.tm, schedule.vm, g.cz_length);

  std::optional<CzTrajectory> leader_cz;
  if (lane_leader)
  {
    r.lane_leader = lane_leader->spec.id;
    leader_cz = lane_leader->cz;
  }
  r.feasibility = check_feasibility(r.cz, g, leader_cz);

  r.exit_position = g.cz_length + path_length(spec.movement, g);
  MzBoundary b;
  b.tm = schedule.tm;
  b.tf = schedule.tf;
  b.vm = schedule.vm;
  b.vf = schedule.vf;
  b.p_start = g.cz_length;
  b.p_end = r.exit_position;
  b.u_start = r.cz.control(schedule.tm);
  b.u_end = config.mz.u_end;
  r.mz = solve_mz(b, config.mz.objective, config.mz.parameters(g), config.mz.exponent_cap);

  r.exit_end = schedule.tf + g.min_safe_distance / schedule.vf;
  return r;
}

//==============================================================================
std::array<int, 5> SimRun::binding_histogram() const
{
  std::array<int, 5> out{};
  for (const auto& v : vehicles)
    ++out[static_cast<std::size_t>(v.schedule.binding)];
  return out;
}

//==============================================================================
SimRun run(const SimConfig& config)
{
  config.validate();

  SimRun out;
  out.config = config;
  out.arrivals = generate_arrival_stream(config);

  // Vehicles wait on their arm in arrival order; only the head of each arm
  // can be admitted.
  std::array<std::deque<const Arrival*>, 4> waiting;
  for (const auto& a : out.arrivals)
    waiting[static_cast<std::size_t>(a.movement.entry)].push_back(&a);

  std::array<std::optional<std::size_t>, 4> last_on_arm;
  QueueState queue;
  out.vehicles.reserve(out.arrivals.size());

  while (out.vehicles.size() < out.arrivals.size())
  {
    const int id = static_cast<int>(out.vehicles.size()) + 1;
    std::optional<Candidate> best;
    const Arrival* best_arrival = nullptr;

    for (std::size_t arm = 0; arm < 4; ++arm)
    {
      if (waiting[arm].empty())
        continue;

      const Arrival* a = waiting[arm].front();
      const VehicleRecord* leader = nullptr;
      double ready = a->time;
      if (last_on_arm[arm])
      {
        leader = &out.vehicles[*last_on_arm[arm]];
        ready = std::max(ready, leader->spec.t0);
      }
      // Candidates at or after the current best cannot win; skip the search.
      if (best && ready > best->t0)
        continue;

      Candidate c = admit(*a, ready, id, queue, leader, config);
      const bool better = !best || c.t0 < best->t0
        || (c.t0 == best->t0 && a->index < best_arrival->index);
      if (better)
      {
        best = std::move(c);
        best_arrival = a;
      }
    }

    const auto arm = static_cast<std::size_t>(best_arrival->movement.entry);
    waiting[arm].pop_front();
    queue.push(best->schedule);
    last_on_arm[arm] = out.vehicles.size();
    out.vehicles.push_back(std::move(best->record));
  }

  out.samples = sample_states(out.vehicles, config.sample_step);
  out.audit = audit_run(out);
  return out;
}

//==============================================================================
SimRun perturb_schedule(const SimRun& base, int id, double dt)
{
  SimRun out = base;
  auto it = std::find_if(out.vehicles.begin(), out.vehicles.end(),
    [id](const VehicleRecord& v) { return v.spec.id == id; });
  if (it == out.vehicles.end())
    throw std::out_of_range("no vehicle with id " + std::to_string(id));

  Schedule s = it->schedule;
  s.tm += dt;
  s.tf += dt;

  const VehicleRecord* leader = nullptr;
  if (it->lane_leader)
    leader = &out.vehicles[static_cast<std::size_t>(*it->lane_leader - 1)];

  VehicleRecord replanned = plan_vehicle(it->spec, s, out.config, leader);
  replanned.arrival_time = it->arrival_time;
  *it = std::move(replanned);

  out.samples = sample_states(out.vehicles, out.config.sample_step);
  out.audit = audit_run(out);
  return out;
}

//==============================================================================
SafetyReport audit_run(const SimRun& run)
{
  return audit_samples(run.samples, run.config.geometry, run.config.tolerances);
}

} // namespace cavint

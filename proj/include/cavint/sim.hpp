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

#ifndef CAVINT__SIM_HPP
#define CAVINT__SIM_HPP

#include <cavint/audit.hpp>
#include <cavint/cz_planner.hpp>
#include <cavint/mz_planner.hpp>
#include <cavint/scheduler.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace cavint {

/// Merging-zone objective used for every vehicle of a run.
struct MzPolicy
{
  MzObjective objective = MzObjective::JerkOnly;
  double w = 0.5;             ///< read for MzObjective::Weighted only
  double jerk_scale = 10.0;   ///< q2 = 1 / jerk_scale^2
  double u_end = 0.0;         ///< terminal MZ acceleration
  double exponent_cap = default_exponent_cap;

  /// Weighting constants q1 = 1 / u_max^2, q2 = 1 / jerk_scale^2.
  WeightedParameters parameters(const IntersectionGeometry& geometry) const;
};

struct SimConfig
{
  IntersectionGeometry geometry;
  double arrival_rate = 1.0;  ///< aggregate Poisson rate, vehicles per second
  double speed_lo = 10.0;
  double speed_hi = 12.0;
  std::array<double, 3> turn_weights{1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};  ///< left, straight, right
  std::array<double, 4> arm_weights{0.25, 0.25, 0.25, 0.25};          ///< W, N, E, S
  int vehicle_count = 30;
  MzPolicy mz;
  std::uint64_t seed = 1;
  double sample_step = 0.1;

  /// Minimum same-lane gap kept by the admission gate, on top of delta.
  double admission_margin = 0.05;
  /// Time resolution of the admission gate search.
  double admission_step = 0.05;

  AuditTolerances tolerances;

  /// Throws ValidationError naming the first offending field.
  void validate() const;
};

/// One raw arrival at the CZ entry, before admission.
struct Arrival
{
  int index = 0;        ///< arrival order, 1-based
  double time = 0.0;
  double speed = 0.0;
  Movement movement;
  std::uint64_t tie_break = 0;
};

/// Seeded arrival stream: exponential gaps at the aggregate rate, uniform
/// speeds, independent arm and turn draws. Simultaneous arrivals are ordered
/// by a random key.
std::vector<Arrival> generate_arrival_stream(const SimConfig& config);

/// Arrivals as vehicle specs with queue ids in arrival order.
std::vector<VehicleSpec> generate_arrivals(const SimConfig& config);

enum class Zone
{
  Control,
  Merging,
  Exit
};

std::string_view to_string(Zone zone);

struct KinematicState
{
  Zone zone = Zone::Control;
  double p = 0.0;
  double v = 0.0;
  double u = 0.0;
  double j = 0.0;
};

struct VehicleRecord
{
  VehicleSpec spec;
  double arrival_time = 0.0;  ///< raw arrival before admission
  Schedule schedule;
  CzTrajectory cz;
  MzTrajectory mz;
  FeasibilityReport feasibility;
  std::optional<int> lane_leader;  ///< previous vehicle admitted on the same arm
  double exit_end = 0.0;          ///< MZ exit plus the constant-speed window
  double exit_position = 0.0;     ///< L + path length

  /// State at time t in [t0, exit_end]. Beyond the MZ the vehicle keeps vf.
  KinematicState state_at(double t) const;
};

/// Builds the trajectories of a scheduled vehicle.
VehicleRecord plan_vehicle(
  const VehicleSpec& spec,
  const Schedule& schedule,
  const SimConfig& config,
  const VehicleRecord* lane_leader);

struct StateSample
{
  double t = 0.0;
  int id = 0;
  Arm arm = Arm::West;
  Turn turn = Turn::Straight;
  Zone zone = Zone::Control;
  double p = 0.0;
  double v = 0.0;
  double u = 0.0;
  double j = 0.0;
};

/// Rows at every multiple of step inside [t0, exit_end) plus exact rows at
/// t0, tm and tf. Sorted by (t, id). Vehicles are sampled concurrently.
std::vector<StateSample> sample_states(
  std::span<const VehicleRecord> vehicles, double step);

/// Single-threaded reference of sample_states().
std::vector<StateSample> sample_states_serial(
  std::span<const VehicleRecord> vehicles, double step);

struct SimRun
{
  SimConfig config;
  std::vector<Arrival> arrivals;
  std::vector<VehicleRecord> vehicles;  ///< in queue order
  std::vector<StateSample> samples;
  SafetyReport audit;

  /// Counts per binding case, indexed by BindingCase.
  std::array<int, 5> binding_histogram() const;
};

/// Runs the event loop, plans every vehicle, samples and audits.
SimRun run(const SimConfig& config);

/// Re-runs the sampling and audit after shifting the MZ window of one
/// vehicle by dt. The vehicle is replanned against its shifted window.
SimRun perturb_schedule(const SimRun& base, int id, double dt);

/// Audits the sampled table of a run with its own geometry and tolerances.
SafetyReport audit_run(const SimRun& run);

} // namespace cavint

#endif // CAVINT__SIM_HPP

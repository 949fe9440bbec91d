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

#ifndef CAVINT__SCHEDULER_HPP
#define CAVINT__SCHEDULER_HPP

#include <cavint/geometry.hpp>

#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace cavint {

/// A vehicle entering the control zone. Ids are queue positions (1-based)
/// assigned in CZ entry order.
struct VehicleSpec
{
  int id = 0;
  double t0 = 0.0;
  double v0 = 0.0;
  Movement movement;
};

/// Latest queue member of each conflict class relative to a vehicle.
struct Predecessors
{
  std::optional<int> e; ///< same exit lane
  std::optional<int> s; ///< same entry lane
  std::optional<int> l; ///< crossing paths
  std::optional<int> o; ///< no conflict

  friend bool operator==(const Predecessors&, const Predecessors&) = default;
};

/// Which candidate achieved the maximum in the exit-time rule. On exact ties
/// the first in declaration order is reported.
enum class BindingCase
{
  RearEndExit,  ///< e: t_e^f + delta / v_e^f
  SameEntry,    ///< s: max(t_s^m + clearance_s + Delta_i, t_s^f)
  Lateral,      ///< l: t_l^f + Delta_i
  NoConflict,   ///< o: t_o^f
  Feasibility   ///< t_i^c + Delta_i
};

std::string_view to_string(BindingCase c);

/// Terminal conditions of one vehicle.
struct Schedule
{
  int id = 0;
  Movement movement;
  double t0 = 0.0;
  double v0 = 0.0;
  double tm = 0.0;          ///< MZ entry time
  double tf = 0.0;          ///< MZ exit time, tm + turn_time
  double vm = 0.0;
  double vf = 0.0;
  double turn_time = 0.0;
  double feasibility_bound = 0.0;  ///< t_i^c
  Predecessors predecessors;
  BindingCase binding = BindingCase::Feasibility;
};

/// Schedules of vehicles 1..n of one intersection, in queue order. Exit
/// times are non-decreasing along the queue.
class QueueState
{
public:
  QueueState() = default;

  /// Appends a schedule. Throws std::invalid_argument if the id is not the
  /// next queue position or if the exit time would decrease.
  void push(Schedule schedule);

  std::span<const Schedule> schedules() const { return _schedules; }
  std::size_t size() const { return _schedules.size(); }
  bool empty() const { return _schedules.empty(); }

  /// Schedule of the vehicle with the given queue id.
  const Schedule& at(int id) const;

  /// Builds a queue from arbitrary schedules without checks. Used for
  /// auditing handcrafted or perturbed data.
  static QueueState unchecked(std::vector<Schedule> schedules);

private:
  std::vector<Schedule> _schedules;
};

Predecessors conflict_predecessors(
  const VehicleSpec& spec,
  const QueueState& queue);

/// Earliest possible MZ arrival: full acceleration from v0 until v_max and
/// cruising afterwards, or full acceleration over the whole CZ when v_max is
/// not reached.
double feasibility_bound(
  double t0, double v0, double cz_length, double v_max, double u_max);

double feasibility_bound(
  const VehicleSpec& spec,
  const IntersectionGeometry& geometry);

/// Exit-time candidates of the max rule; absent classes stay empty.
struct ExitCandidates
{
  std::optional<double> e;
  std::optional<double> s;
  std::optional<double> l;
  std::optional<double> o;
  double feasibility = 0.0;
};

ExitCandidates exit_candidates(
  const VehicleSpec& spec,
  const Predecessors& predecessors,
  const QueueState& queue,
  const IntersectionGeometry& geometry);

Schedule schedule(
  const VehicleSpec& spec,
  const QueueState& queue,
  const IntersectionGeometry& geometry);

//==============================================================================
enum class OrderingViolationKind
{
  ExitOrder,    ///< same exit lane: follower must exit strictly later
  EntryOrder,   ///< same entry lane: follower must enter strictly later
  MzOverlap,    ///< crossing paths: MZ occupancy intervals overlap
  Monotonicity  ///< exit times decrease along the queue
};

std::string_view to_string(OrderingViolationKind kind);

struct OrderingViolation
{
  OrderingViolationKind kind;
  int leader;
  int follower;
  double leader_time;
  double follower_time;
};

/// Re-checks the ordering conditions for every pair in the queue. MZ
/// intervals count as overlapping when they share more than 1e-9 s.
std::vector<OrderingViolation> audit_queue(const QueueState& queue);

} // namespace cavint

#endif // CAVINT__SCHEDULER_HPP

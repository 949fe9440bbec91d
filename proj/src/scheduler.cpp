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

#include <cavint/scheduler.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cavint {

//==============================================================================
std::string_view to_string(BindingCase c)
{
  switch (c)
  {
    case BindingCase::RearEndExit: return "e";
    case BindingCase::SameEntry: return "s";
    case BindingCase::Lateral: return "l";
    case BindingCase::NoConflict: return "o";
    case BindingCase::Feasibility: return "c";
  }
  return "?";
}

//==============================================================================
std::string_view to_string(OrderingViolationKind kind)
{
  switch (kind)
  {
    case OrderingViolationKind::ExitOrder: return "exit_order";
    case OrderingViolationKind::EntryOrder: return "entry_order";
    case OrderingViolationKind::MzOverlap: return "mz_overlap";
    case OrderingViolationKind::Monotonicity: return "monotonicity";
  }
  return "?";
}

//==============================================================================
void QueueState::push(Schedule schedule)
{
  const int expected = static_cast<int>(_schedules.size()) + 1;
  if (schedule.id != expected)
  {
    throw std::invalid_argument(
      "schedule id " + std::to_string(schedule.id)
      + " does not match queue position " + std::to_string(expected));
  }

  if (!_schedules.empty() && schedule.tf < _schedules.back().tf)
  {
    throw std::invalid_argument(
      "schedule " + std::to_string(schedule.id)
      + " would exit before its queue predecessor");
  }

  _schedules.push_back(std::move(schedule));
}

//==============================================================================
const Schedule& QueueState::at(int id) const
{
  if (id < 1 || id > static_cast<int>(_schedules.size()))
    throw std::out_of_range("no schedule with id " + std::to_string(id));
  return _schedules[static_cast<std::size_t>(id - 1)];
}

//==============================================================================
QueueState QueueState::unchecked(std::vector<Schedule> schedules)
{
  QueueState q;
  q._schedules = std::move(schedules);
  return q;
}

//==============================================================================
Predecessors conflict_predecessors(
  const VehicleSpec& spec,
  const QueueState& queue)
{
  Predecessors out;
  for (const auto& other : queue.schedules())
  {
    if (other.id >= spec.id)
      continue;

    // Queue order is id order, so the last hit of each class is its maximum.
    switch (classify(spec.movement, other.movement))
    {
      case ConflictClass::SameExit: out.e = other.id; break;
      case ConflictClass::SameEntry: out.s = other.id; break;
      case ConflictClass::Lateral: out.l = other.id; break;
      case ConflictClass::NoConflict: out.o = other.id; break;
    }
  }
  return out;
}

//==============================================================================
double feasibility_bound(
  double t0, double v0, double cz_length, double v_max, double u_max)
{
  const double reach_sq = 2.0 * cz_length * u_max + v0 * v0;
  if (reach_sq >= v_max * v_max)
  {
    return t0 + cz_length / v_max
      + (v_max - v0) * (v_max - v0) / (2.0 * u_max * v_max);
  }
  return t0 + (std::sqrt(reach_sq) - v0) / u_max;
}

//==============================================================================
double feasibility_bound(
  const VehicleSpec& spec,
  const IntersectionGeometry& geometry)
{
  return feasibility_bound(
    spec.t0, spec.v0, geometry.cz_length, geometry.v_max, geometry.u_max);
}

//==============================================================================
ExitCandidates exit_candidates(
  const VehicleSpec& spec,
  const Predecessors& pred,
  const QueueState& queue,
  const IntersectionGeometry& geometry)
{
  const double delta_i = turn_time(spec.movement, geometry);

  ExitCandidates c;
  if (pred.e)
  {
    const auto& e = queue.at(*pred.e);
    c.e = e.tf + geometry.min_safe_distance / e.vf;
  }

  if (pred.s)
  {
    const auto& s = queue.at(*pred.s);
    c.s = std::max(
      s.tm + clearance_time(s.movement, geometry) + delta_i, s.tf);
  }

  if (pred.l)
    c.l = queue.at(*pred.l).tf + delta_i;

  if (pred.o)
    c.o = queue.at(*pred.o).tf;

  c.feasibility = feasibility_bound(spec, geometry) + delta_i;
  return c;
}

//==============================================================================
Schedule schedule(
  const VehicleSpec& spec,
  const QueueState& queue,
  const IntersectionGeometry& geometry)
{
  Schedule out;
  out.id = spec.id;
  out.movement = spec.movement;
  out.t0 = spec.t0;
  out.v0 = spec.v0;
  out.turn_time = turn_time(spec.movement, geometry);
  out.vm = mz_exit_speed(spec.movement, geometry);
  out.vf = out.vm;
  out.feasibility_bound = feasibility_bound(spec, geometry);
  out.predecessors = conflict_predecessors(spec, queue);

  const ExitCandidates c =
    exit_candidates(spec, out.predecessors, queue, geometry);

  // Scan in binding-case order; strict comparison keeps the first on ties.
  double tf = -std::numeric_limits<double>::infinity();
  const auto consider = [&](const std::optional<double>& value, BindingCase k)
  {
    if (value && *value > tf)
    {
      tf = *value;
      out.binding = k;
    }
  };
  consider(c.e, BindingCase::RearEndExit);
  consider(c.s, BindingCase::SameEntry);
  consider(c.l, BindingCase::Lateral);
  consider(c.o, BindingCase::NoConflict);
  consider(c.feasibility, BindingCase::Feasibility);

  out.tf = tf;
  out.tm = tf - out.turn_time;
  return out;
}

namespace {

constexpr double overlap_tolerance = 1e-9;

} // anonymous namespace

//==============================================================================
std::vector<OrderingViolation> audit_queue(const QueueState& queue)
{
  std::vector<OrderingViolation> out;
  const auto schedules = queue.schedules();

  for (std::size_t i = 0; i < schedules.size(); ++i)
  {
    const Schedule& follower = schedules[i];
    if (i > 0 && follower.tf < schedules[i - 1].tf)
    {
      out.push_back({OrderingViolationKind::Monotonicity,
          schedules[i - 1].id, follower.id, schedules[i - 1].tf, follower.tf});
    }

    for (std::size_t j = 0; j < i; ++j)
    {
      const Schedule& leader = schedules[j];
      switch (classify(follower.movement, leader.movement))
      {
        case ConflictClass::SameExit:
          if (!(follower.tf > leader.tf))
          {
            out.push_back({OrderingViolationKind::ExitOrder,
                leader.id, follower.id, leader.tf, follower.tf});
          }
          break;
        case ConflictClass::SameEntry:
          if (!(follower.tm > leader.tm))
          {
            out.push_back({OrderingViolationKind::EntryOrder,
                leader.id, follower.id, leader.tm, follower.tm});
          }
          break;
        case ConflictClass::Lateral:
          // Closed intervals may touch but not overlap. tm = tf - Delta can
          // land one rounding step before the leader's exit.
          if (std::min(leader.tf, follower.tf) - std::max(leader.tm, follower.tm)
              > overlap_tolerance)
          {
            out.push_back({OrderingViolationKind::MzOverlap,
                leader.id, follower.id, leader.tf, follower.tm});
          }
          break;
        case ConflictClass::NoConflict:
          break;
      }
    }
  }
  return out;
}

} // namespace cavint

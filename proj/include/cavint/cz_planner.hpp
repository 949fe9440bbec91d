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

#ifndef CAVINT__CZ_PLANNER_HPP
#define CAVINT__CZ_PLANNER_HPP

#include <cavint/errors.hpp>
#include <cavint/geometry.hpp>

#include <optional>
#include <string_view>
#include <vector>

namespace cavint {

//==============================================================================
/// Unconstrained fuel-optimal motion over the control zone: linear control,
/// quadratic speed, cubic position.
///
/// Coefficients are expressed in the shifted time tau = t - t0:
///   u = a tau + b,  v = a tau^2 / 2 + b tau + c,
///   p = a tau^3 / 6 + b tau^2 / 2 + c tau + d.
struct CzTrajectory
{
  double t0 = 0.0;
  double tm = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;

  double v0 = 0.0;
  double vm = 0.0;
  double length = 0.0;

  /// Condition number of the boundary system.
  double condition = 1.0;

  double duration() const { return tm - t0; }

  double position(double t) const;
  double speed(double t) const;
  double control(double t) const;
  double jerk(double /*t*/) const { return a; }
};

/// Solves p(t0) = 0, v(t0) = v0, p(tm) = length, v(tm) = vm. Throws
/// PlanningError when tm <= t0.
CzTrajectory solve_cz(double t0, double v0, double tm, double vm, double length);

//==============================================================================
enum class FeasibilityIssueKind
{
  SpeedBelowMin,
  SpeedAboveMax,
  ControlBelowMin,
  ControlAboveMax,
  RearEnd
};

std::string_view to_string(FeasibilityIssueKind kind);

struct FeasibilityIssue
{
  FeasibilityIssueKind kind;
  double time;   ///< first time the bound is broken (extremum for bounds)
  double value;  ///< extreme value of the offending quantity
  double limit;
};

struct FeasibilityReport
{
  std::vector<FeasibilityIssue> issues;

  /// Smallest bumper gap to the leader, when one was given.
  std::optional<double> min_gap;
  std::optional<double> min_gap_time;

  bool ok() const { return issues.empty(); }
};

/// Analytic check of the speed and control bounds along the trajectory, and
/// of the rear-end gap to a same-lane leader over the common CZ window.
FeasibilityReport check_feasibility(
  const CzTrajectory& trajectory,
  const IntersectionGeometry& geometry,
  const std::optional<CzTrajectory>& leader = std::nullopt);

/// 1/2 * integral of u^2 over [t0, tm].
double cz_cost(const CzTrajectory& trajectory);

} // namespace cavint

#endif // CAVINT__CZ_PLANNER_HPP

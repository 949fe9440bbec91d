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
#include <cavint/detail/boundary_solve.hpp>

#include <algorithm>
#include <cmath>

namespace cavint {

//==============================================================================
double CzTrajectory::position(double t) const
{
  const double tau = t - t0;
  return ((a * tau / 6.0 + b / 2.0) * tau + c) * tau + d;
}

//==============================================================================
double CzTrajectory::speed(double t) const
{
  const double tau = t - t0;
  return (a * tau / 2.0 + b) * tau + c;
}

//==============================================================================
double CzTrajectory::control(double t) const
{
  return a * (t - t0) + b;
}

//==============================================================================
CzTrajectory solve_cz(double t0, double v0, double tm, double vm, double length)
{
  const double T = tm - t0;
  if (!(T > 0.0))
    throw PlanningError("control-zone window is empty: tm must exceed t0");

  // Unknowns (a, b, c, d) of the shifted-time cubic; rows are p(0), v(0),
  // p(T), v(T).
  Eigen::Matrix4d A;
  A << 0.0, 0.0, 0.0, 1.0,
       0.0, 0.0, 1.0, 0.0,
       T * T * T / 6.0, T * T / 2.0, T, 1.0,
       T * T / 2.0, T, 1.0, 0.0;
  const Eigen::Vector4d rhs(0.0, v0, length, vm);

  const auto sol = detail::solve_boundary_system(A, rhs);

  CzTrajectory out;
  out.t0 = t0;
  out.tm = tm;
  out.a = sol.x(0);
  out.b = sol.x(1);
  out.c = sol.x(2);
  out.d = sol.x(3);
  out.v0 = v0;
  out.vm = vm;
  out.length = length;
  out.condition = sol.condition;
  return out;
}

//==============================================================================
std::string_view to_string(FeasibilityIssueKind kind)
{
  switch (kind)
  {
    case FeasibilityIssueKind::SpeedBelowMin: return "speed_below_min";
    case FeasibilityIssueKind::SpeedAboveMax: return "speed_above_max";
    case FeasibilityIssueKind::ControlBelowMin: return "control_below_min";
    case FeasibilityIssueKind::ControlAboveMax: return "control_above_max";
    case FeasibilityIssueKind::RearEnd: return "rear_end";
  }
  return "?";
}

namespace {

constexpr double bound_tolerance = 1e-9;

struct Extremum
{
  double time;
  double value;
};

void check_bounds(
  const CzTrajectory& tr,
  const IntersectionGeometry& g,
  FeasibilityReport& report)
{
  // Speed is quadratic in time: endpoints plus the stationary point.
  std::vector<double> times{tr.t0, tr.tm};
  if (tr.a != 0.0)
  {
    const double t_star = tr.t0 - tr.b / tr.a;
    if (t_star > tr.t0 && t_star < tr.tm)
      times.push_back(t_star);
  }

  Extremum vmin{tr.t0, tr.speed(tr.t0)};
  Extremum vmax = vmin;
  for (const double t : times)
  {
    const double v = tr.speed(t);
    if (v < vmin.value)
      vmin = {t, v};
    if (v > vmax.value)
      vmax = {t, v};
  }

  const double v_tol = bound_tolerance * std::max(1.0, g.v_max);
  if (vmin.value < g.v_min - v_tol)
  {
    report.issues.push_back(
      {FeasibilityIssueKind::SpeedBelowMin, vmin.time, vmin.value, g.v_min});
  }
  if (vmax.value > g.v_max + v_tol)
  {
    report.issues.push_back(
      {FeasibilityIssueKind::SpeedAboveMax, vmax.time, vmax.value, g.v_max});
  }

  // Control is linear: the endpoints are the extrema.
  const Extremum u0{tr.t0, tr.control(tr.t0)};
  const Extremum u1{tr.tm, tr.control(tr.tm)};
  const Extremum umin = u1.value < u0.value ? u1 : u0;
  const Extremum umax = u1.value > u0.value ? u1 : u0;
  const double u_tol =
    bound_tolerance * std::max({1.0, g.u_max, -g.u_min});
  if (umin.value < g.u_min - u_tol)
  {
    report.issues.push_back(
      {FeasibilityIssueKind::ControlBelowMin, umin.time, umin.value, g.u_min});
  }
  if (umax.value > g.u_max + u_tol)
  {
    report.issues.push_back(
      {FeasibilityIssueKind::ControlAboveMax, umax.time, umax.value, g.u_max});
  }
}

double eval_cubic(const std::array<double, 4>& c, double s)
{
  return ((c[3] * s + c[2]) * s + c[1]) * s + c[0];
}

// First point of [lo, hi] where the monotone cubic crosses below zero, given
// g(lo) >= 0 > g(hi).
double first_crossing(const std::array<double, 4>& g, double lo, double hi)
{
  for (const double r : detail::cubic_real_roots(g))
  {
    if (r >= lo && r <= hi && std::abs(eval_cubic(g, r)) <= 1e-9)
      return r;
  }

  // Bisection fallback.
  while (hi - lo > 1e-12)
  {
    const double mid = 0.5 * (lo + hi);
    if (eval_cubic(g, mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

void check_rear_end(
  const CzTrajectory& follower,
  const CzTrajectory& leader,
  double delta,
  FeasibilityReport& report)
{
  const double start = std::max(follower.t0, leader.t0);
  const double end = std::min(follower.tm, leader.tm);
  if (end < start)
    return;

  // gap(start + s) - delta as a cubic in s.
  const std::array<double, 4> g{
    leader.position(start) - follower.position(start) - delta,
    leader.speed(start) - follower.speed(start),
    0.5 * (leader.control(start) - follower.control(start)),
    (leader.a - follower.a) / 6.0};

  const double width = end - start;
  std::vector<double> points{0.0, width};
  const std::array<double, 4> dg{g[1], 2.0 * g[2], 3.0 * g[3], 0.0};
  for (const double r : detail::cubic_real_roots(dg))
  {
    if (r > 0.0 && r < width)
      points.push_back(r);
  }
  std::sort(points.begin(), points.end());

  double min_s = points.front();
  double min_value = eval_cubic(g, min_s);
  for (const double s : points)
  {
    const double v = eval_cubic(g, s);
    if (v < min_value)
    {
      min_value = v;
      min_s = s;
    }
  }

  report.min_gap = min_value + delta;
  report.min_gap_time = start + min_s;

  const double tol = bound_tolerance * std::max(1.0, delta);
  if (min_value >= -tol)
    return;

  double first = min_s;
  if (eval_cubic(g, points.front()) < -tol)
  {
    first = points.front();
  }
  else
  {
    for (std::size_t k = 1; k < points.size(); ++k)
    {
      if (eval_cubic(g, points[k]) < -tol)
      {
        first = first_crossing(g, points[k - 1], points[k]);
        break;
      }
    }
  }

  report.issues.push_back(
    {FeasibilityIssueKind::RearEnd, start + first, min_value + delta, delta});
}

} // anonymous namespace

//==============================================================================
FeasibilityReport check_feasibility(
  const CzTrajectory& trajectory,
  const IntersectionGeometry& geometry,
  const std::optional<CzTrajectory>& leader)
{
  FeasibilityReport report;
  check_bounds(trajectory, geometry, report);
  if (leader)
    check_rear_end(trajectory, *leader, geometry.min_safe_distance, report);
  return report;
}

//==============================================================================
double cz_cost(const CzTrajectory& tr)
{
  const double T = tr.duration();
  return 0.5 * (tr.a * tr.a * T * T * T / 3.0 + tr.a * tr.b * T * T + tr.b * tr.b * T);
}

} // namespace cavint

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

#include <cavint/pareto.hpp>

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <string>

namespace cavint {

namespace {

void validate_grid(std::span<const double> grid)
{
  for (const double w : grid)
  {
    if (!(w > 0.0 && w < 1.0))
    {
      throw PlanningError(
        "grid weight w = " + std::to_string(w) + " is outside (0, 1); "
        "w = 0 and w = 1 are the degenerate jerk-only and fuel-only problems");
    }
  }
}

ParetoPoint solve_point(
  const MzBoundary& boundary, double w, double q1, double q2)
{
  try
  {
    MzTrajectory tr = solve_mz_weighted(boundary, {w, q1, q2});
    const MzCosts costs = mz_costs(tr, q1, q2);
    return ParetoPoint{w, costs.fuel, costs.discomfort, std::move(tr)};
  }
  catch (const PlanningError& e)
  {
    throw PlanningError(
      "sweep failed at w = " + std::to_string(w) + ": " + e.what());
  }
}

ParetoRun assemble(
  const MzBoundary& boundary,
  std::span<const double> grid,
  std::vector<ParetoPoint> points)
{
  ParetoRun run;
  run.boundary = boundary;
  run.grid.assign(grid.begin(), grid.end());
  run.points = std::move(points);

  std::vector<CostPair> pairs;
  pairs.reserve(run.points.size());
  for (const auto& p : run.points)
    pairs.push_back({p.fuel, p.discomfort});

  // Ties go to the lower weight: visit points in ascending w.
  std::vector<std::size_t> order(run.points.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    order[i] = i;
  std::stable_sort(order.begin(), order.end(),
    [&](std::size_t a, std::size_t b) { return run.points[a].w < run.points[b].w; });

  std::vector<CostPair> sorted;
  sorted.reserve(order.size());
  for (const std::size_t i : order)
    sorted.push_back(pairs[i]);

  for (const std::size_t k : frontier(sorted))
    run.frontier.push_back(order[k]);
  std::sort(run.frontier.begin(), run.frontier.end());
  return run;
}

} // anonymous namespace

//==============================================================================
bool ParetoRun::on_frontier(std::size_t index) const
{
  return std::binary_search(frontier.begin(), frontier.end(), index);
}

//==============================================================================
std::vector<double> default_weight_grid(std::size_t count, double lo, double hi)
{
  if (count == 0)
    return {};
  const auto logit = [](double p) { return std::log(p / (1.0 - p)); };
  const double x0 = logit(lo);
  const double x1 = logit(hi);
  if (count == 1)
    return {1.0 / (1.0 + std::exp(-0.5 * (x0 + x1)))};

  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i)
  {
    const double x = x0 + (x1 - x0) * static_cast<double>(i)
      / static_cast<double>(count - 1);
    grid[i] = 1.0 / (1.0 + std::exp(-x));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

//==============================================================================
ParetoRun sweep_serial(
  const MzBoundary& boundary,
  std::span<const double> grid,
  double q1,
  double q2)
{
  validate_grid(grid);
  std::vector<ParetoPoint> points;
  points.reserve(grid.size());
  for (const double w : grid)
    points.push_back(solve_point(boundary, w, q1, q2));
  return assemble(boundary, grid, std::move(points));
}

//==============================================================================
ParetoRun sweep(
  const MzBoundary& boundary,
  std::span<const double> grid,
  double q1,
  double q2)
{
  validate_grid(grid);
  const auto n = static_cast<std::ptrdiff_t>(grid.size());
  std::vector<std::optional<ParetoPoint>> slots(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  #pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
  {
    const auto k = static_cast<std::size_t>(i);
    try
    {
      slots[k] = solve_point(boundary, grid[k], q1, q2);
    }
    catch (...)
    {
      errors[k] = std::current_exception();
    }
  }

  // Report the first failure in grid order so errors are deterministic.
  for (const auto& e : errors)
  {
    if (e)
      std::rethrow_exception(e);
  }

  std::vector<ParetoPoint> points;
  points.reserve(slots.size());
  for (auto& s : slots)
    points.push_back(std::move(*s));
  return assemble(boundary, grid, std::move(points));
}

//==============================================================================
std::vector<std::size_t> frontier(std::span<const CostPair> points)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < points.size(); ++i)
  {
    bool keep = true;
    for (std::size_t j = 0; j < points.size() && keep; ++j)
    {
      if (i == j)
        continue;

      const auto& a = points[j];
      const auto& b = points[i];
      const bool no_worse = a.fuel <= b.fuel && a.discomfort <= b.discomfort;
      const bool better = a.fuel < b.fuel || a.discomfort < b.discomfort;
      if (no_worse && better)
        keep = false;
      else if (no_worse && j < i)
        keep = false;  // identical pair seen earlier
    }
    if (keep)
      out.push_back(i);
  }
  return out;
}

} // namespace cavint

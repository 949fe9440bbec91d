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

#ifndef CAVINT__PARETO_HPP
#define CAVINT__PARETO_HPP

#include <cavint/mz_planner.hpp>

#include <span>
#include <vector>

namespace cavint {

struct ParetoPoint
{
  double w = 0.0;
  double fuel = 0.0;
  double discomfort = 0.0;
  MzTrajectory trajectory;
};

struct ParetoRun
{
  MzBoundary boundary;
  std::vector<double> grid;
  std::vector<ParetoPoint> points;  ///< one per grid value, in grid order

  /// Indices into points of the non-dominated subset, ascending.
  std::vector<std::size_t> frontier;

  bool on_frontier(std::size_t index) const;
};

/// Weights spaced uniformly in log-odds between lo and hi, which clusters
/// them logarithmically toward both ends of (0, 1).
std::vector<double> default_weight_grid(
  std::size_t count = 50, double lo = 1e-3, double hi = 1.0 - 1e-3);

/// Solves the weighted problem at every grid value. Grid points are solved
/// concurrently; results are stored in grid order. Throws PlanningError
/// naming the offending w when a value is outside (0, 1) or a solve fails.
ParetoRun sweep(
  const MzBoundary& boundary,
  std::span<const double> grid,
  double q1,
  double q2);

/// Single-threaded reference of sweep().
ParetoRun sweep_serial(
  const MzBoundary& boundary,
  std::span<const double> grid,
  double q1,
  double q2);

struct CostPair
{
  double fuel;
  double discomfort;
};

/// Indices of the non-dominated pairs when minimizing both costs. Among
/// identical pairs only the first is kept. Output is ascending.
std::vector<std::size_t> frontier(std::span<const CostPair> points);

} // namespace cavint

#endif // CAVINT__PARETO_HPP

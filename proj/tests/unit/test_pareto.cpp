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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace cavint;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

constexpr double q1 = 1.0 / 9.0;
constexpr double q2 = 0.01;

MzBoundary left_boundary()
{
  MzBoundary b;
  b.tm = 0.0;
  b.tf = 5.0;
  b.vm = b.vf = 8.0;
  b.p_start = 400.0;
  b.p_end = 400.0 + 3.0 * std::numbers::pi * 30.0 / 8.0;
  return b;
}

} // anonymous namespace

TEST_CASE("frontier of small sets")
{
  const std::vector<CostPair> a{{1, 2}, {2, 1}, {2, 2}};
  CHECK(frontier(a) == std::vector<std::size_t>{0, 1});

  const std::vector<CostPair> same{{3, 3}, {3, 3}, {3, 3}};
  CHECK(frontier(same) == std::vector<std::size_t>{0});

  CHECK(frontier(std::vector<CostPair>{}).empty());

  const std::vector<CostPair> chain{{1, 5}, {2, 4}, {3, 3}, {3, 4}, {0.5, 9}};
  CHECK(frontier(chain) == std::vector<std::size_t>{0, 1, 2, 4});
}

TEST_CASE("default grid is symmetric in log-odds")
{
  const auto g = default_weight_grid();
  REQUIRE(g.size() == 50);
  CHECK(g.front() == 1e-3);
  CHECK_THAT(g.back(), WithinRel(1.0 - 1e-3, 1e-15));
  for (std::size_t i = 1; i < g.size(); ++i)
    CHECK(g[i] > g[i - 1]);
  for (std::size_t i = 0; i < g.size(); ++i)
    CHECK(std::abs(g[i] + g[g.size() - 1 - i] - 1.0) < 1e-12);
  CHECK_THAT(default_weight_grid(1, 0.25, 0.75).at(0), WithinRel(0.5, 1e-15));
  CHECK_THAT(default_weight_grid(1, 0.1, 0.5).at(0), WithinRel(0.25, 1e-14));
}

TEST_CASE("consistent boundary collapses to one frontier point")
{
  MzBoundary b;
  b.tf = 3.0;
  b.vm = b.vf = 10.0;
  b.p_start = 400.0;
  b.p_end = 430.0;
  const auto grid = default_weight_grid();
  const auto r = sweep(b, grid, q1, q2);
  REQUIRE(r.points.size() == 50);
  for (const auto& p : r.points)
  {
    CHECK(p.fuel < 1e-12);
    CHECK(p.discomfort < 1e-12);
  }
  CHECK(r.frontier == std::vector<std::size_t>{0});
}

TEST_CASE("left-turn sweep trades fuel for comfort")
{
  const auto b = left_boundary();
  const auto grid = default_weight_grid();
  const auto r = sweep(b, grid, q1, q2);
  REQUIRE(r.points.size() == grid.size());

  for (std::size_t i = 1; i < r.points.size(); ++i)
  {
    CHECK(r.points[i].fuel <= r.points[i - 1].fuel + 1e-9);
    CHECK(r.points[i].discomfort >= r.points[i - 1].discomfort - 1e-9);
  }
  CHECK(r.frontier.size() == r.points.size());

  // Endpoints against the dedicated solvers.
  const double jerk_discomfort = mz_costs(solve_mz_jerk(b), q1, q2).discomfort;
  const double fuel_optimum = mz_costs(solve_mz_fuel(b), q1, q2).fuel;
  CHECK(std::abs(r.points.front().discomfort / jerk_discomfort - 1.0) < 0.01);
  CHECK(std::abs(r.points.back().fuel / fuel_optimum - 1.0) < 0.01);
  CHECK(r.points.back().fuel >= fuel_optimum);

  // Each point is optimal for its own weight.
  for (const auto& own : r.points)
  {
    const double J = combine_costs(own.fuel, own.discomfort, own.w, q1, q2);
    for (const auto& other : r.points)
      CHECK(J <= combine_costs(other.fuel, other.discomfort, own.w, q1, q2) + 1e-9);
  }
}

TEST_CASE("parallel sweep equals the serial reference")
{
  const auto b = left_boundary();
  const auto grid = default_weight_grid(400);
  const auto a = sweep(b, grid, q1, q2);
  const auto s = sweep_serial(b, grid, q1, q2);
  REQUIRE(a.points.size() == s.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i)
  {
    CHECK(a.points[i].w == s.points[i].w);
    CHECK(a.points[i].fuel == s.points[i].fuel);
    CHECK(a.points[i].discomfort == s.points[i].discomfort);
  }
  CHECK(a.frontier == s.frontier);
}

TEST_CASE("sweep rejects degenerate weights")
{
  const auto b = left_boundary();
  for (const auto& grid : {std::vector{0.0, 0.5}, std::vector{0.5, 1.0}, std::vector{-0.1}})
  {
    CHECK_THROWS_WITH(sweep(b, grid, q1, q2), ContainsSubstring("degenerate"));
    CHECK_THROWS_AS(sweep_serial(b, grid, q1, q2), PlanningError);
  }
}

TEST_CASE("single weight is its own frontier")
{
  const std::vector<double> grid{0.5};
  const auto r = sweep(left_boundary(), grid, q1, q2);
  REQUIRE(r.points.size() == 1);
  CHECK(r.on_frontier(0));
}

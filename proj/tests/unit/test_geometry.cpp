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

#include <cavint/geometry.hpp>
#include <cavint/path_geometry.hpp>

#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace cavint;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

const Movement w_left{Arm::West, Turn::Left};
const Movement w_straight{Arm::West, Turn::Straight};
const Movement w_right{Arm::West, Turn::Right};

} // anonymous namespace

TEST_CASE("exit arms follow right-hand traffic")
{
  CHECK(w_left.exit() == Arm::North);
  CHECK(w_straight.exit() == Arm::East);
  CHECK(w_right.exit() == Arm::South);
  CHECK(Movement{Arm::South, Turn::Left}.exit() == Arm::West);
  CHECK(Movement{Arm::North, Turn::Right}.exit() == Arm::West);
  CHECK(Movement{Arm::East, Turn::Straight}.exit() == Arm::West);
}

TEST_CASE("movement indices cover 0..11")
{
  const auto all = all_movements();
  for (int i = 0; i < 12; ++i)
    CHECK(all[i].index() == i);
}

TEST_CASE("classify examples")
{
  CHECK(classify(w_straight, w_left) == ConflictClass::SameEntry);
  CHECK(classify(w_straight, Movement{Arm::North, Turn::Straight}) == ConflictClass::Lateral);
  CHECK(classify(w_right, Movement{Arm::East, Turn::Right}) == ConflictClass::NoConflict);
  CHECK(classify(w_left, Movement{Arm::East, Turn::Right}) == ConflictClass::SameExit);
}

TEST_CASE("classification is symmetric and matches the sampled-path oracle")
{
  const auto all = all_movements();
  int lateral = 0;
  for (const auto& a : all)
  {
    for (const auto& b : all)
    {
      const ConflictClass c = classify(a, b);
      CHECK(c == classify(b, a));
      CHECK(c == oracle::classify_by_sampling(a, b));
      if (a.entry == b.entry)
        CHECK(c == ConflictClass::SameEntry);
      lateral += c == ConflictClass::Lateral;
    }
  }
  // Frozen from the sampled-path oracle.
  CHECK(lateral == 36);
}

TEST_CASE("MZ paths start and end on the lane centrelines")
{
  const double S = 30.0;
  const auto start = mz_path(w_straight, S).point_at(0.0);
  const auto end = mz_path(w_straight, S).point_at(1.0);
  CHECK_THAT(start.x(), WithinAbs(0.0, 1e-12));
  CHECK_THAT(start.y(), WithinAbs(S / 4, 1e-12));
  CHECK_THAT(end.x(), WithinAbs(S, 1e-12));

  CHECK_THAT(mz_path(w_left, S).length(), WithinRel(3 * std::numbers::pi * S / 8, 1e-12));
  CHECK_THAT(mz_path(w_right, S).length(), WithinRel(std::numbers::pi * S / 8, 1e-12));
}

TEST_CASE("turn times, path lengths and MZ speeds in table mode")
{
  const IntersectionGeometry g;
  CHECK(turn_time(w_straight, g) == 3.0);
  CHECK(turn_time(w_left, g) == 5.0);
  CHECK(turn_time(w_right, g) == 3.0);
  CHECK(mz_exit_speed(w_left, g) == 8.0);
  CHECK(mz_exit_speed(w_straight, g) == 10.0);
  CHECK(mz_exit_speed(w_right, g) == 6.0);
  CHECK_THAT(path_length(w_left, g), WithinRel(3 * std::numbers::pi * 30 / 8, 1e-15));
  CHECK_THAT(path_length(w_right, g), WithinRel(std::numbers::pi * 30 / 8, 1e-15));
  CHECK(path_length(w_straight, g) == 30.0);
  CHECK(clearance_time(w_left, g) == 1.25);
  CHECK(clearance_time(w_straight, g) == 1.0);
}

TEST_CASE("formula mode")
{
  IntersectionGeometry g;
  g.turn_time_mode = TurnTimeMode::Formula;
  g.formula = TurnFormulaParameters{100.0, 20.0, 0.2, 0.0};

  SECTION("straight is S / v^a")
  {
    CHECK(turn_time(w_straight, g) * g.v_straight == g.mz_side);
    g.v_straight = 30.0;
    CHECK(turn_time(w_straight, g) == 1.0);
  }

  SECTION("turns use the design speed in mph and radius in ft")
  {
    const double v = std::sqrt(15.0 * 100.0 * 0.2);
    CHECK_THAT(turn_time(w_left, g), WithinRel(100.0 / v, 1e-15));
    CHECK_THAT(turn_speed(w_left, g), WithinRel(v * 0.44704, 1e-15));
    CHECK_THAT(clearance_time(w_left, g), WithinRel(10.0 / (v * 0.44704), 1e-15));
  }

  SECTION("non-positive radius or friction")
  {
    g.formula->radius_left_ft = 0.0;
    CHECK_THROWS_AS(turn_time(w_left, g), GeometryError);
    g.formula->radius_left_ft = 100.0;
    g.formula->side_friction = 0.0;
    CHECK_THROWS_AS(turn_time(w_left, g), GeometryError);
  }
}

TEST_CASE("validation names the field")
{
  const auto field_of = [](const IntersectionGeometry& g) -> std::string
  {
    try
    {
      g.validate();
    }
    catch (const GeometryError& e)
    {
      return e.field();
    }
    return "";
  };

  IntersectionGeometry g;
  CHECK(field_of(g).empty());

  g.min_safe_distance = 0.0;
  CHECK(field_of(g) == "min_safe_distance");

  g = {};
  g.cz_length = 20.0;
  CHECK(field_of(g) == "cz_length");

  g = {};
  g.v_left = 20.0;
  CHECK(field_of(g) == "v_left");

  g = {};
  g.turn_time_mode = TurnTimeMode::Formula;
  CHECK(field_of(g) == "formula");
}

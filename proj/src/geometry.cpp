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

#include <cmath>
#include <numbers>

namespace cavint {

namespace {

constexpr double mph_to_mps = 0.44704;

// Precomputed crossing table; the predicate only depends on the layout shape,
// not on the side length.
struct CrossingTable
{
  std::array<std::array<bool, 12>, 12> cross{};

  CrossingTable()
  {
    const auto movements = all_movements();
    for (const auto& a : movements)
    {
      const MzPath pa = mz_path(a, 1.0);
      for (const auto& b : movements)
        cross[a.index()][b.index()] = intersects(pa, mz_path(b, 1.0));
    }
  }
};

const CrossingTable& crossing_table()
{
  static const CrossingTable table;
  return table;
}

void require(bool condition, const char* field, const std::string& what)
{
  if (!condition)
    throw GeometryError(field, what);
}

} // anonymous namespace

//==============================================================================
std::string_view to_string(Arm arm)
{
  switch (arm)
  {
    case Arm::West: return "W";
    case Arm::North: return "N";
    case Arm::East: return "E";
    case Arm::South: return "S";
  }
  return "?";
}

//==============================================================================
std::string_view to_string(Turn turn)
{
  switch (turn)
  {
    case Turn::Left: return "left";
    case Turn::Straight: return "straight";
    case Turn::Right: return "right";
  }
  return "?";
}

//==============================================================================
std::string_view to_string(ConflictClass c)
{
  switch (c)
  {
    case ConflictClass::SameEntry: return "same_entry";
    case ConflictClass::SameExit: return "same_exit";
    case ConflictClass::Lateral: return "lateral";
    case ConflictClass::NoConflict: return "no_conflict";
  }
  return "?";
}

//==============================================================================
std::optional<Arm> parse_arm(std::string_view text)
{
  if (text == "W" || text == "west" || text == "West") return Arm::West;
  if (text == "N" || text == "north" || text == "North") return Arm::North;
  if (text == "E" || text == "east" || text == "East") return Arm::East;
  if (text == "S" || text == "south" || text == "South") return Arm::South;
  return std::nullopt;
}

//==============================================================================
std::optional<Turn> parse_turn(std::string_view text)
{
  if (text == "left" || text == "0") return Turn::Left;
  if (text == "straight" || text == "1") return Turn::Straight;
  if (text == "right" || text == "2") return Turn::Right;
  return std::nullopt;
}

//==============================================================================
Arm Movement::exit() const
{
  static constexpr std::array<int, 3> offset{1, 2, 3};
  return static_cast<Arm>(
    (static_cast<int>(entry) + offset[static_cast<int>(turn)]) % 4);
}

//==============================================================================
std::array<Movement, 12> all_movements()
{
  std::array<Movement, 12> out;
  for (const Arm a : all_arms)
    for (const Turn t : all_turns)
    {
      const Movement m{a, t};
      out[m.index()] = m;
    }
  return out;
}

//==============================================================================
std::string to_string(const Movement& m)
{
  return std::string(to_string(m.entry)) + "->" + std::string(to_string(m.turn));
}

//==============================================================================
IntersectionGeometry IntersectionGeometry::reference()
{
  return IntersectionGeometry{};
}

//==============================================================================
double IntersectionGeometry::left_length() const
{
  if (left_path_length > 0.0)
    return left_path_length;
  return 3.0 * std::numbers::pi * mz_side / 8.0;
}

//==============================================================================
double IntersectionGeometry::right_length() const
{
  if (right_path_length > 0.0)
    return right_path_length;
  return std::numbers::pi * mz_side / 8.0;
}

//==============================================================================
void IntersectionGeometry::validate() const
{
  require(mz_side > 0.0, "mz_side", "must be positive");
  require(cz_length > mz_side, "cz_length", "must exceed mz_side");
  require(min_safe_distance > 0.0, "min_safe_distance", "must be positive");
  require(left_path_length >= 0.0, "left_path_length", "must not be negative");
  require(right_path_length >= 0.0, "right_path_length", "must not be negative");
  require(v_min >= 0.0, "v_min", "must not be negative");
  require(v_max > v_min, "v_max", "must exceed v_min");
  require(u_min < 0.0, "u_min", "must be negative");
  require(u_max > 0.0, "u_max", "must be positive");

  const auto in_speed_range = [this](double v)
  { return v > v_min && v <= v_max; };
  require(in_speed_range(v_straight), "v_straight", "must lie in (v_min, v_max]");
  require(in_speed_range(v_left), "v_left", "must lie in (v_min, v_max]");
  require(in_speed_range(v_right), "v_right", "must lie in (v_min, v_max]");

  if (turn_time_mode == TurnTimeMode::Table)
  {
    require(turn_time_left > 0.0, "turn_time_left", "must be positive");
    require(turn_time_straight > 0.0, "turn_time_straight", "must be positive");
    require(turn_time_right > 0.0, "turn_time_right", "must be positive");
  }
  else
  {
    require(formula.has_value(), "formula", "required when turn_time_mode is formula");
    require(formula->radius_left_ft > 0.0, "formula.radius_left_ft", "must be positive");
    require(formula->radius_right_ft > 0.0, "formula.radius_right_ft", "must be positive");
    require(formula->side_friction > 0.0, "formula.side_friction", "must be positive");
    require(formula->superelevation >= 0.0, "formula.superelevation", "must not be negative");
  }
}

//==============================================================================
double path_length(const Movement& m, const IntersectionGeometry& g)
{
  switch (m.turn)
  {
    case Turn::Left: return g.left_length();
    case Turn::Straight: return g.mz_side;
    case Turn::Right: return g.right_length();
  }
  throw std::logic_error("unreachable turn value");
}

//==============================================================================
double design_speed_mph(double radius_ft, const TurnFormulaParameters& p)
{
  const double friction = 0.01 * p.superelevation + p.side_friction;
  if (radius_ft <= 0.0)
    throw GeometryError("formula.radius", "turn radius must be positive");
  if (friction <= 0.0)
    throw GeometryError("formula.side_friction", "friction factor must be positive");
  return std::sqrt(15.0 * radius_ft * friction);
}

namespace {

double formula_radius_ft(const Movement& m, const IntersectionGeometry& g)
{
  if (!g.formula)
    throw GeometryError("formula", "formula mode requires turn formula parameters");
  return m.turn == Turn::Left ? g.formula->radius_left_ft : g.formula->radius_right_ft;
}

} // anonymous namespace

//==============================================================================
double turn_time(const Movement& m, const IntersectionGeometry& g)
{
  if (g.turn_time_mode == TurnTimeMode::Table)
  {
    switch (m.turn)
    {
      case Turn::Left: return g.turn_time_left;
      case Turn::Straight: return g.turn_time_straight;
      case Turn::Right: return g.turn_time_right;
    }
  }

  if (m.turn == Turn::Straight)
    return g.mz_side / g.v_straight;

  const double radius = formula_radius_ft(m, g);
  return radius / design_speed_mph(radius, *g.formula);
}

//==============================================================================
double mz_exit_speed(const Movement& m, const IntersectionGeometry& g)
{
  switch (m.turn)
  {
    case Turn::Left: return g.v_left;
    case Turn::Straight: return g.v_straight;
    case Turn::Right: return g.v_right;
  }
  throw std::logic_error("unreachable turn value");
}

//==============================================================================
double turn_speed(const Movement& m, const IntersectionGeometry& g)
{
  if (g.turn_time_mode == TurnTimeMode::Table || m.turn == Turn::Straight)
    return mz_exit_speed(m, g);

  const double radius = formula_radius_ft(m, g);
  return design_speed_mph(radius, *g.formula) * mph_to_mps;
}

//==============================================================================
double clearance_time(const Movement& m, const IntersectionGeometry& g)
{
  return g.min_safe_distance / turn_speed(m, g);
}

//==============================================================================
bool mz_paths_cross(const Movement& a, const Movement& b)
{
  return crossing_table().cross[a.index()][b.index()];
}

//==============================================================================
ConflictClass classify(const Movement& a, const Movement& b)
{
  if (a.entry == b.entry)
    return ConflictClass::SameEntry;
  if (a.exit() == b.exit())
    return ConflictClass::SameExit;
  if (mz_paths_cross(a, b))
    return ConflictClass::Lateral;
  return ConflictClass::NoConflict;
}

} // namespace cavint

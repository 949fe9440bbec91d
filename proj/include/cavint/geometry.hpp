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

#ifndef CAVINT__GEOMETRY_HPP
#define CAVINT__GEOMETRY_HPP

#include <cavint/errors.hpp>

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cavint {

//==============================================================================
/// The four approaches of a single four-way intersection. Arms are numbered
/// clockwise starting from West so that rotating the layout by a quarter turn
/// clockwise maps arm k onto arm k+1.
enum class Arm : int
{
  West = 0,
  North = 1,
  East = 2,
  South = 3
};

/// Turn decision of a vehicle. The numeric values match the usual encoding
/// d = 0 (left), d = 1 (straight), d = 2 (right).
enum class Turn : int
{
  Left = 0,
  Straight = 1,
  Right = 2
};

/// Pairwise relationship between two movements through the merging zone.
enum class ConflictClass
{
  SameEntry,  ///< same approach lane: rear-end risk at the MZ entry
  SameExit,   ///< different entry, same departure lane: rear-end risk at the MZ exit
  Lateral,    ///< MZ paths cross
  NoConflict  ///< disjoint MZ paths
};

inline constexpr std::array<Arm, 4> all_arms{
  Arm::West, Arm::North, Arm::East, Arm::South};
inline constexpr std::array<Turn, 3> all_turns{
  Turn::Left, Turn::Straight, Turn::Right};

std::string_view to_string(Arm arm);
std::string_view to_string(Turn turn);
std::string_view to_string(ConflictClass c);

std::optional<Arm> parse_arm(std::string_view text);
std::optional<Turn> parse_turn(std::string_view text);

//==============================================================================
struct Movement
{
  Arm entry = Arm::West;
  Turn turn = Turn::Straight;

  /// Departure arm. Left turns exit one arm clockwise of the entry (West ->
  /// North), through movements the opposite arm, right turns one arm
  /// counter-clockwise (West -> South). Right-hand traffic.
  Arm exit() const;

  /// Index in [0, 12) usable for lookup tables.
  int index() const { return static_cast<int>(entry) * 3 + static_cast<int>(turn); }

  friend bool operator==(const Movement&, const Movement&) = default;
};

/// All twelve movements of a four-arm layout, ordered by index().
std::array<Movement, 12> all_movements();

std::string to_string(const Movement& m);

//==============================================================================
class GeometryError : public ValidationError
{
public:
  using ValidationError::ValidationError;
};

/// How the time spent inside the merging zone is obtained.
enum class TurnTimeMode
{
  /// Configured durations per turn.
  Table,

  /// Design-speed formula for turns, S / v^a for through movements.
  /// Units follow the US highway design convention: radii in feet and design
  /// speeds in mph, i.e. v = sqrt(15 R (0.01 E + F)) [mph] and the turn time
  /// is R / v evaluated in those units.
  Formula
};

struct TurnFormulaParameters
{
  double radius_left_ft = 0.0;
  double radius_right_ft = 0.0;
  double side_friction = 0.0;  ///< F
  double superelevation = 0.0; ///< E, percent; zero in urban settings
};

/// Layout, limits and merging-zone speed policy of one intersection. All
/// quantities are SI unless noted.
struct IntersectionGeometry
{
  double cz_length = 400.0;         ///< L, CZ entry to MZ entry
  double mz_side = 30.0;            ///< S, side of the square merging zone
  double left_path_length = 0.0;    ///< S_L; 0 selects the arc length 3*pi*S/8
  double right_path_length = 0.0;   ///< S_R; 0 selects the arc length pi*S/8
  double min_safe_distance = 10.0;  ///< delta

  double v_min = 0.0;
  double v_max = 13.0;
  double u_min = -3.0;
  double u_max = 3.0;

  double v_straight = 10.0;  ///< v^a
  double v_left = 8.0;       ///< v_L^a
  double v_right = 6.0;      ///< v_R^a

  TurnTimeMode turn_time_mode = TurnTimeMode::Table;
  double turn_time_left = 5.0;
  double turn_time_straight = 3.0;
  double turn_time_right = 3.0;
  std::optional<TurnFormulaParameters> formula;

  /// The four-way layout used throughout the simulation examples.
  static IntersectionGeometry reference();

  /// Throws GeometryError naming the first field that breaks an invariant.
  void validate() const;

  double left_length() const;
  double right_length() const;
};

/// Arc length of the merging-zone path of a movement.
double path_length(const Movement& m, const IntersectionGeometry& g);

/// Time a vehicle is scheduled to spend inside the merging zone.
double turn_time(const Movement& m, const IntersectionGeometry& g);

/// Speed at MZ entry and MZ exit (they are equal by policy).
double mz_exit_speed(const Movement& m, const IntersectionGeometry& g);

/// Travel speed used to clear the safe distance inside the merging zone. In
/// table mode this is the MZ speed of the movement; in formula mode turning
/// movements use the design speed converted to m/s.
double turn_speed(const Movement& m, const IntersectionGeometry& g);

/// Time the given movement needs to travel the safe distance inside the MZ.
double clearance_time(const Movement& m, const IntersectionGeometry& g);

/// Design speed sqrt(15 R (0.01 E + F)) in mph for a turn radius in feet.
double design_speed_mph(double radius_ft, const TurnFormulaParameters& p);

//==============================================================================
/// Classify the relationship of two movements. Precedence: equal entry arms,
/// then equal exit arms, then geometric crossing of the MZ paths.
ConflictClass classify(const Movement& a, const Movement& b);

/// Geometric predicate behind the Lateral / NoConflict split.
bool mz_paths_cross(const Movement& a, const Movement& b);

} // namespace cavint

#endif // CAVINT__GEOMETRY_HPP

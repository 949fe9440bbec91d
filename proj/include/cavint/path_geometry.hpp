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

#ifndef CAVINT__PATH_GEOMETRY_HPP
#define CAVINT__PATH_GEOMETRY_HPP

#include <cavint/geometry.hpp>

#include <Eigen/Core>

#include <variant>

namespace cavint {

// The merging zone is the square [0, S] x [0, S] with North towards +y and
// East towards +x. Each approach has one inbound and one outbound lane, their
// centerlines at S/4 and 3S/4 from the square's edges. Through movements are
// straight segments; turns are quarter circles centered on a corner of the
// square with radius S/4 (right) or 3S/4 (left).

struct Segment
{
  Eigen::Vector2d from;
  Eigen::Vector2d to;
};

/// Counter-clockwise angular range [start, start + sweep] of a circle, with
/// sweep in (0, 2 pi). The direction of travel is irrelevant for crossing
/// tests and is ignored here.
struct Arc
{
  Eigen::Vector2d center;
  double radius;
  double start;
  double sweep;
};

using PathPiece = std::variant<Segment, Arc>;

struct MzPath
{
  PathPiece piece;

  /// Arc length of the piece.
  double length() const;

  /// Point at normalized parameter s in [0, 1] along the piece.
  Eigen::Vector2d point_at(double s) const;
};

/// Centerline of the merging-zone path of a movement for a square of the
/// given side.
MzPath mz_path(const Movement& m, double side);

/// Exact intersection test between two path pieces. Endpoints count as
/// intersections within the relative tolerance.
bool intersects(const MzPath& a, const MzPath& b, double tolerance = 1e-9);

} // namespace cavint

#endif // CAVINT__PATH_GEOMETRY_HPP

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

#include <cavint/path_geometry.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace cavint {

namespace {

constexpr double pi = std::numbers::pi;

//==============================================================================
// Quarter-turn clockwise rotation about the square's center.
Eigen::Vector2d rotate_cw(const Eigen::Vector2d& p, double side, int quarters)
{
  const Eigen::Vector2d c(side / 2.0, side / 2.0);
  Eigen::Vector2d d = p - c;
  for (int k = 0; k < quarters; ++k)
    d = Eigen::Vector2d(d.y(), -d.x());
  return c + d;
}

double wrap_angle(double a)
{
  a = std::fmod(a, 2.0 * pi);
  if (a < 0.0)
    a += 2.0 * pi;
  return a;
}

bool angle_in_arc(double angle, const Arc& arc, double tol)
{
  const double rel = wrap_angle(angle - arc.start);
  return rel <= arc.sweep + tol || rel >= 2.0 * pi - tol;
}

Arc rotate_arc(const Arc& arc, double side, int quarters)
{
  return Arc{
    rotate_cw(arc.center, side, quarters),
    arc.radius,
    wrap_angle(arc.start - quarters * pi / 2.0),
    arc.sweep};
}

//==============================================================================
double cross(const Eigen::Vector2d& a, const Eigen::Vector2d& b)
{
  return a.x() * b.y() - a.y() * b.x();
}

double point_segment_distance(const Eigen::Vector2d& p, const Segment& s)
{
  const Eigen::Vector2d d = s.to - s.from;
  const double len2 = d.squaredNorm();
  if (len2 == 0.0)
    return (p - s.from).norm();
  const double t = std::clamp((p - s.from).dot(d) / len2, 0.0, 1.0);
  return (p - (s.from + t * d)).norm();
}

bool intersect(const Segment& a, const Segment& b, double tol)
{
  const Eigen::Vector2d r = a.to - a.from;
  const Eigen::Vector2d s = b.to - b.from;
  const double denom = cross(r, s);
  const Eigen::Vector2d qp = b.from - a.from;

  if (std::abs(denom) > tol * r.norm() * s.norm())
  {
    const double t = cross(qp, s) / denom;
    const double u = cross(qp, r) / denom;
    return t >= -tol && t <= 1.0 + tol && u >= -tol && u <= 1.0 + tol;
  }

  // Parallel: only touching or collinear overlap can intersect.
  const double scale = std::max(r.norm(), s.norm());
  return point_segment_distance(a.from, b) <= tol * scale
    || point_segment_distance(a.to, b) <= tol * scale
    || point_segment_distance(b.from, a) <= tol * scale
    || point_segment_distance(b.to, a) <= tol * scale;
}

bool intersect(const Segment& seg, const Arc& arc, double tol)
{
  // Solve |from + t d - c|^2 = R^2 for t in [0, 1].
  const Eigen::Vector2d d = seg.to - seg.from;
  const Eigen::Vector2d f = seg.from - arc.center;
  const double A = d.squaredNorm();
  const double B = 2.0 * f.dot(d);
  const double C = f.squaredNorm() - arc.radius * arc.radius;
  double disc = B * B - 4.0 * A * C;
  const double scale = arc.radius * arc.radius * A;
  if (disc < -tol * scale)
    return false;
  disc = std::max(disc, 0.0);

  const double sq = std::sqrt(disc);
  for (const double t : {(-B - sq) / (2.0 * A), (-B + sq) / (2.0 * A)})
  {
    if (t < -tol || t > 1.0 + tol)
      continue;
    const Eigen::Vector2d p = seg.from + t * d - arc.center;
    if (angle_in_arc(std::atan2(p.y(), p.x()), arc, tol))
      return true;
  }
  return false;
}

bool intersect(const Arc& a, const Arc& b, double tol)
{
  const Eigen::Vector2d delta = b.center - a.center;
  const double dist = delta.norm();
  const double scale = std::max(a.radius, b.radius);

  if (dist <= tol * scale)
  {
    // Concentric: only the same circle with overlapping ranges intersects.
    if (std::abs(a.radius - b.radius) > tol * scale)
      return false;
    return angle_in_arc(b.start, a, tol)
      || angle_in_arc(b.start + b.sweep, a, tol)
      || angle_in_arc(a.start, b, tol);
  }

  if (dist > a.radius + b.radius + tol * scale)
    return false;
  if (dist < std::abs(a.radius - b.radius) - tol * scale)
    return false;

  // Intersection points of the two circles.
  const double x =
    (dist * dist + a.radius * a.radius - b.radius * b.radius) / (2.0 * dist);
  const double h = std::sqrt(std::max(a.radius * a.radius - x * x, 0.0));
  const Eigen::Vector2d e = delta / dist;
  const Eigen::Vector2d n(-e.y(), e.x());
  const Eigen::Vector2d base = a.center + x * e;

  for (const double sign : {-1.0, 1.0})
  {
    const Eigen::Vector2d p = base + sign * h * n;
    const Eigen::Vector2d pa = p - a.center;
    const Eigen::Vector2d pb = p - b.center;
    if (angle_in_arc(std::atan2(pa.y(), pa.x()), a, tol)
      && angle_in_arc(std::atan2(pb.y(), pb.x()), b, tol))
      return true;
  }
  return false;
}

} // anonymous namespace

//==============================================================================
double MzPath::length() const
{
  return std::visit(
    [](const auto& p) -> double
    {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, Segment>)
        return (p.to - p.from).norm();
      else
        return p.radius * p.sweep;
    }, piece);
}

//==============================================================================
Eigen::Vector2d MzPath::point_at(double s) const
{
  return std::visit(
    [s](const auto& p) -> Eigen::Vector2d
    {
      using T = std::decay_t<decltype(p)>;
      if constexpr (std::is_same_v<T, Segment>)
        return p.from + s * (p.to - p.from);
      else
      {
        const double angle = p.start + s * p.sweep;
        return p.center
          + p.radius * Eigen::Vector2d(std::cos(angle), std::sin(angle));
      }
    }, piece);
}

//==============================================================================
MzPath mz_path(const Movement& m, double side)
{
  // Paths for the West approach (heading east on the lane y = S/4), rotated
  // into place for the other approaches.
  const int quarters = static_cast<int>(m.entry);
  switch (m.turn)
  {
    case Turn::Straight:
      return MzPath{Segment{
          rotate_cw(Eigen::Vector2d(0.0, side / 4.0), side, quarters),
          rotate_cw(Eigen::Vector2d(side, side / 4.0), side, quarters)}};
    case Turn::Right:
      // Around the south-west corner, from (0, S/4) to (S/4, 0).
      return MzPath{rotate_arc(
          Arc{Eigen::Vector2d(0.0, 0.0), side / 4.0, 0.0, pi / 2.0},
          side, quarters)};
    case Turn::Left:
      // Around the north-west corner, from (0, S/4) to (3S/4, S).
      return MzPath{rotate_arc(
          Arc{Eigen::Vector2d(0.0, side), 0.75 * side, 1.5 * pi, pi / 2.0},
          side, quarters)};
  }
  throw std::logic_error("unreachable turn value");
}

//==============================================================================
bool intersects(const MzPath& a, const MzPath& b, double tolerance)
{
  return std::visit(
    [tolerance](const auto& pa, const auto& pb) -> bool
    {
      using A = std::decay_t<decltype(pa)>;
      using B = std::decay_t<decltype(pb)>;
      if constexpr (std::is_same_v<A, Segment> && std::is_same_v<B, Arc>)
        return intersect(pa, pb, tolerance);
      else if constexpr (std::is_same_v<A, Arc> && std::is_same_v<B, Segment>)
        return intersect(pb, pa, tolerance);
      else
        return intersect(pa, pb, tolerance);
    }, a.piece, b.piece);
}

} // namespace cavint

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

#include <cavint/audit.hpp>
#include <cavint/sim.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace cavint {

namespace {

// Per-vehicle view rebuilt from the table.
struct Track
{
  int id = 0;
  Movement movement;
  std::vector<const StateSample*> rows;  // ascending t
  double t0 = 0.0;
  double v0 = 0.0;
  double tm = std::numeric_limits<double>::quiet_NaN();
  double tf = std::numeric_limits<double>::quiet_NaN();
  double vf = std::numeric_limits<double>::quiet_NaN();
};

std::vector<Track> rebuild(std::span<const StateSample> samples)
{
  std::map<int, Track> tracks;
  for (const auto& s : samples)
  {
    Track& tr = tracks[s.id];
    tr.id = s.id;
    tr.movement = Movement{s.arm, s.turn};
    tr.rows.push_back(&s);
  }

  std::vector<Track> out;
  out.reserve(tracks.size());
  for (auto& [id, tr] : tracks)
  {
    std::stable_sort(tr.rows.begin(), tr.rows.end(),
      [](const StateSample* a, const StateSample* b) { return a->t < b->t; });
    tr.t0 = tr.rows.front()->t;
    tr.v0 = tr.rows.front()->v;
    for (const StateSample* r : tr.rows)
    {
      if (r->zone == Zone::Merging && std::isnan(tr.tm))
        tr.tm = r->t;
      if (r->zone == Zone::Exit && std::isnan(tr.tf))
      {
        tr.tf = r->t;
        tr.vf = r->v;
      }
    }
    out.push_back(std::move(tr));
  }
  return out;
}

const StateSample* row_at(const Track& tr, double t)
{
  auto it = std::lower_bound(tr.rows.begin(), tr.rows.end(), t,
    [](const StateSample* r, double value) { return r->t < value; });
  if (it == tr.rows.end() || (*it)->t != t)
    return nullptr;
  return *it;
}

// Earliest arrival over length under full acceleration capped at v_max.
double earliest_arrival(double v0, double length, double v_max, double u_max)
{
  const double ramp = (v_max * v_max - v0 * v0) / (2.0 * u_max);
  if (ramp >= length)
    return (std::sqrt(v0 * v0 + 2.0 * u_max * length) - v0) / u_max;
  return (v_max - v0) / u_max + (length - ramp) / v_max;
}

void check_lane_gaps(
  const std::vector<Track>& tracks,
  const IntersectionGeometry& g,
  const AuditTolerances& tol,
  std::vector<Finding>& out)
{
  std::array<std::vector<const Track*>, 4> lanes;
  for (const auto& tr : tracks)
    lanes[static_cast<std::size_t>(tr.movement.entry)].push_back(&tr);

  for (auto& lane : lanes)
  {
    std::stable_sort(lane.begin(), lane.end(),
      [](const Track* a, const Track* b)
      { return a->t0 != b->t0 ? a->t0 < b->t0 : a->id < b->id; });

    for (std::size_t k = 1; k < lane.size(); ++k)
    {
      const Track& leader = *lane[k - 1];
      const Track& follower = *lane[k];

      double worst = std::numeric_limits<double>::infinity();
      double worst_time = 0.0;
      for (const StateSample* r : follower.rows)
      {
        if (r->zone != Zone::Control && r->t != follower.tm)
          continue;
        const StateSample* l = row_at(leader, r->t);
        if (!l)
          continue;
        const double gap = l->p - r->p;
        if (gap < worst)
        {
          worst = gap;
          worst_time = r->t;
        }
      }

      if (worst < g.min_safe_distance - tol.gap)
      {
        out.push_back({FindingKind::RearEndGap, follower.id, leader.id,
          worst_time, worst, g.min_safe_distance});
      }
    }
  }
}

} // anonymous namespace

//==============================================================================
std::string_view to_string(FindingKind kind)
{
  switch (kind)
  {
    case FindingKind::RearEndGap: return "rear_end_gap";
    case FindingKind::LateralOverlap: return "lateral_overlap";
    case FindingKind::ExitSpacing: return "exit_spacing";
    case FindingKind::ExitOrder: return "exit_order";
    case FindingKind::UnreachableEntry: return "unreachable_entry";
  }
  return "?";
}

//==============================================================================
SafetyReport audit_samples(
  std::span<const StateSample> samples,
  const IntersectionGeometry& g,
  const AuditTolerances& tol)
{
  SafetyReport report;
  auto& out = report.findings;
  const std::vector<Track> tracks = rebuild(samples);

  check_lane_gaps(tracks, g, tol, out);

  for (std::size_t i = 0; i < tracks.size(); ++i)
  {
    const Track& a = tracks[i];
    for (std::size_t j = i + 1; j < tracks.size(); ++j)
    {
      const Track& b = tracks[j];
      const ConflictClass c = classify(a.movement, b.movement);

      if (c == ConflictClass::Lateral)
      {
        const double overlap = std::min(a.tf, b.tf) - std::max(a.tm, b.tm);
        if (overlap > tol.time)
        {
          out.push_back({FindingKind::LateralOverlap, b.id, a.id,
            std::max(a.tm, b.tm), overlap, 0.0});
        }
      }
      else if (c == ConflictClass::SameExit)
      {
        const double limit = a.tf + g.min_safe_distance / a.vf;
        if (b.tf < limit - tol.time)
          out.push_back({FindingKind::ExitSpacing, b.id, a.id, b.tf, b.tf, limit});
      }
    }
  }

  for (std::size_t i = 1; i < tracks.size(); ++i)
  {
    const Track& prev = tracks[i - 1];
    const Track& cur = tracks[i];
    if (cur.tf < prev.tf - tol.time)
      out.push_back({FindingKind::ExitOrder, cur.id, prev.id, cur.tf, cur.tf, prev.tf});
  }

  for (const Track& tr : tracks)
  {
    const double earliest =
      tr.t0 + earliest_arrival(tr.v0, g.cz_length, g.v_max, g.u_max);
    if (tr.tm < earliest - tol.time)
      out.push_back({FindingKind::UnreachableEntry, tr.id, 0, tr.tm, tr.tm, earliest});
  }

  std::stable_sort(out.begin(), out.end(),
    [](const Finding& x, const Finding& y)
    { return x.id != y.id ? x.id < y.id : x.kind < y.kind; });
  return report;
}

} // namespace cavint

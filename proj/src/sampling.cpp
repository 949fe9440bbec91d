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

#include <cavint/sim.hpp>

#include <algorithm>
#include <cmath>

namespace cavint {

namespace {

std::vector<StateSample> sample_vehicle(const VehicleRecord& v, double step)
{
  std::vector<double> times{v.spec.t0, v.schedule.tm, v.schedule.tf};

  auto k = static_cast<long long>(std::ceil(v.spec.t0 / step));
  for (;; ++k)
  {
    const double t = static_cast<double>(k) * step;
    if (t < v.spec.t0)
      continue;
    if (t >= v.exit_end)
      break;
    times.push_back(t);
  }

  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());

  std::vector<StateSample> rows;
  rows.reserve(times.size());
  for (const double t : times)
  {
    const KinematicState s = v.state_at(t);
    rows.push_back(StateSample{
      t, v.spec.id, v.spec.movement.entry, v.spec.movement.turn,
      s.zone, s.p, s.v, s.u, s.j});
  }
  return rows;
}

std::vector<StateSample> merge(std::vector<std::vector<StateSample>> parts)
{
  std::size_t total = 0;
  for (const auto& p : parts)
    total += p.size();

  std::vector<StateSample> out;
  out.reserve(total);
  for (auto& p : parts)
    out.insert(out.end(), p.begin(), p.end());

  std::sort(out.begin(), out.end(),
    [](const StateSample& a, const StateSample& b)
    {
      if (a.t != b.t)
        return a.t < b.t;
      return a.id < b.id;
    });
  return out;
}

} // anonymous namespace

//==============================================================================
std::vector<StateSample> sample_states(
  std::span<const VehicleRecord> vehicles, double step)
{
  std::vector<std::vector<StateSample>> parts(vehicles.size());
  const auto n = static_cast<std::ptrdiff_t>(vehicles.size());

  #pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < n; ++i)
  {
    const auto k = static_cast<std::size_t>(i);
    parts[k] = sample_vehicle(vehicles[k], step);
  }

  return merge(std::move(parts));
}

//==============================================================================
std::vector<StateSample> sample_states_serial(
  std::span<const VehicleRecord> vehicles, double step)
{
  std::vector<std::vector<StateSample>> parts;
  parts.reserve(vehicles.size());
  for (const auto& v : vehicles)
    parts.push_back(sample_vehicle(v, step));
  return merge(std::move(parts));
}

} // namespace cavint

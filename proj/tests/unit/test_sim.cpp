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

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <random>

using namespace cavint;
using Catch::Matchers::WithinAbs;

namespace {

bool same_samples(const std::vector<StateSample>& a, const std::vector<StateSample>& b)
{
  if (a.size() != b.size())
    return false;
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    const auto& x = a[i];
    const auto& y = b[i];
    if (x.t != y.t || x.id != y.id || x.zone != y.zone || x.p != y.p
      || x.v != y.v || x.u != y.u || x.j != y.j || x.arm != y.arm || x.turn != y.turn)
      return false;
  }
  return true;
}

bool has_kind(const SafetyReport& r, FindingKind kind)
{
  return std::any_of(r.findings.begin(), r.findings.end(),
    [kind](const Finding& f) { return f.kind == kind; });
}

} // anonymous namespace

TEST_CASE("arrival stream is reproducible")
{
  SimConfig c;
  c.seed = 99;
  const auto a = generate_arrival_stream(c);
  const auto b = generate_arrival_stream(c);
  REQUIRE(a.size() == 30);
  for (std::size_t i = 0; i < a.size(); ++i)
  {
    CHECK(a[i].index == static_cast<int>(i) + 1);
    CHECK(a[i].time == b[i].time);
    CHECK(a[i].speed == b[i].speed);
    CHECK(a[i].movement == b[i].movement);
    if (i > 0)
      CHECK(a[i].time >= a[i - 1].time);
  }
  c.seed = 100;
  CHECK(generate_arrival_stream(c)[0].time != a[0].time);

  const auto specs = generate_arrivals(c);
  for (std::size_t i = 0; i < specs.size(); ++i)
    CHECK(specs[i].id == static_cast<int>(i) + 1);
}

TEST_CASE("arrival statistics")
{
  SimConfig c;
  c.vehicle_count = 10000;
  c.seed = 2024;
  const auto a = generate_arrival_stream(c);
  REQUIRE(a.size() == 10000);

  // Exponential gaps: mean 1/rate, standard deviation 1/rate.
  const double mean_gap = a.back().time / static_cast<double>(a.size());
  CHECK(std::abs(mean_gap - 1.0) < 3.0 / std::sqrt(10000.0));

  double speed_sum = 0.0;
  std::array<int, 4> arms{};
  std::array<int, 3> turns{};
  for (const auto& x : a)
  {
    CHECK(x.speed >= 10.0);
    CHECK(x.speed <= 12.0);
    speed_sum += x.speed;
    ++arms[static_cast<std::size_t>(x.movement.entry)];
    ++turns[static_cast<std::size_t>(x.movement.turn)];
  }
  // Uniform on [10, 12]: standard deviation 2 / sqrt(12).
  CHECK(std::abs(speed_sum / 1e4 - 11.0) < 3.0 * (2.0 / std::sqrt(12.0)) / 100.0);
  for (const int n : arms)
    CHECK(std::abs(n - 2500) < 4 * std::sqrt(10000 * 0.25 * 0.75));
  for (const int n : turns)
    CHECK(std::abs(n - 10000.0 / 3.0) < 4 * std::sqrt(10000 * (1.0 / 3.0) * (2.0 / 3.0)));
}

TEST_CASE("single cruising vehicle")
{
  SimConfig c;
  c.vehicle_count = 1;
  c.geometry.v_max = 10.0;
  c.speed_lo = c.speed_hi = 10.0;
  c.turn_weights = {0.0, 1.0, 0.0};
  const auto r = run(c);
  REQUIRE(r.vehicles.size() == 1);
  const auto& v = r.vehicles[0];
  CHECK(v.schedule.binding == BindingCase::Feasibility);
  CHECK_THAT(v.schedule.tm - v.schedule.t0, WithinAbs(40.0, 1e-12));
  CHECK(cz_cost(v.cz) < 1e-20);
  CHECK(mz_costs(v.mz, 1.0, 1.0).discomfort < 1e-20);
  CHECK(r.audit.clean());
  for (const auto& s : r.samples)
  {
    CHECK_THAT(s.v, WithinAbs(10.0, 1e-9));
    CHECK_THAT(s.u, WithinAbs(0.0, 1e-9));
  }
}

TEST_CASE("merging-zone objective does not change the schedule")
{
  SimConfig c;
  c.seed = 4;
  c.mz.objective = MzObjective::JerkOnly;
  const auto jerk = run(c);
  c.mz.objective = MzObjective::FuelOnly;
  const auto fuel = run(c);
  c.mz.objective = MzObjective::Weighted;
  c.mz.w = 0.5;
  const auto weighted = run(c);

  for (const auto* other : {&fuel, &weighted})
  {
    REQUIRE(other->vehicles.size() == jerk.vehicles.size());
    for (std::size_t i = 0; i < jerk.vehicles.size(); ++i)
    {
      const auto& a = jerk.vehicles[i].schedule;
      const auto& b = other->vehicles[i].schedule;
      CHECK(a.t0 == b.t0);
      CHECK(a.tm == b.tm);
      CHECK(a.tf == b.tf);
      CHECK(a.binding == b.binding);
    }
    REQUIRE(other->samples.size() == jerk.samples.size());
    bool mz_differs = false;
    for (std::size_t i = 0; i < jerk.samples.size(); ++i)
    {
      const auto& a = jerk.samples[i];
      const auto& b = other->samples[i];
      REQUIRE(a.t == b.t);
      REQUIRE(a.id == b.id);
      if (a.zone == Zone::Merging && a.t > jerk.vehicles[static_cast<std::size_t>(a.id - 1)].schedule.tm)
        mz_differs = mz_differs || a.u != b.u || a.j != b.j;
      else if (a.zone != Zone::Merging)
      {
        CHECK(a.p == b.p);
        CHECK(a.u == b.u);
        CHECK(a.j == b.j);
      }
    }
    CHECK(mz_differs);
  }
}

TEST_CASE("zone bookkeeping")
{
  SimConfig c;
  c.seed = 12;
  const auto r = run(c);
  const auto& g = c.geometry;
  for (const auto& v : r.vehicles)
  {
    const auto& s = v.schedule;
    CHECK_THAT(v.cz.position(s.tm), WithinAbs(g.cz_length, 1e-6));
    CHECK_THAT(v.mz.position(s.tm), WithinAbs(g.cz_length, 1e-6));
    CHECK_THAT(v.mz.position(s.tf), WithinAbs(g.cz_length + path_length(s.movement, g), 1e-6));
    CHECK(v.state_at(s.t0).zone == Zone::Control);
    CHECK(v.state_at(s.tm).zone == Zone::Merging);
    CHECK(v.state_at(s.tf).zone == Zone::Exit);
    CHECK_THAT(v.exit_end, WithinAbs(s.tf + g.min_safe_distance / s.vf, 1e-12));
  }

  // First sampled MZ row sits within one step of tm.
  for (const auto& v : r.vehicles)
  {
    const auto it = std::find_if(r.samples.begin(), r.samples.end(), [&](const StateSample& x) {
      return x.id == v.spec.id && x.zone == Zone::Merging;
    });
    REQUIRE(it != r.samples.end());
    CHECK(std::abs(it->t - v.schedule.tm) <= c.sample_step);
  }
}

TEST_CASE("parallel sampling equals the serial reference")
{
  SimConfig c;
  c.seed = 3;
  c.vehicle_count = 60;
  const auto r = run(c);
  CHECK(same_samples(sample_states(r.vehicles, 0.02), sample_states_serial(r.vehicles, 0.02)));
  CHECK(same_samples(r.samples, sample_states_serial(r.vehicles, c.sample_step)));
}

TEST_CASE("runs are deterministic")
{
  SimConfig c;
  c.seed = 17;
  const auto a = run(c);
  const auto b = run(c);
  CHECK(same_samples(a.samples, b.samples));
  CHECK(a.binding_histogram() == b.binding_histogram());
}

TEST_CASE("reference runs audit clean")
{
  for (std::uint64_t seed = 1; seed <= 5; ++seed)
  {
    SimConfig c;
    c.seed = seed;
    const auto r = run(c);
    INFO("seed " << seed);
    CHECK(r.vehicles.size() == 30);
    CHECK(r.audit.clean());
    CHECK(audit_run(r).findings.empty());
    for (const auto& v : r.vehicles)
      CHECK(v.schedule.tm >= v.schedule.feasibility_bound - 1e-9);
  }
}

TEST_CASE("auditor sees injected faults")
{
  SimConfig c;
  c.seed = 2;
  const auto base = run(c);
  REQUIRE(base.audit.clean());

  SECTION("shrunk window on every vehicle")
  {
    for (const auto& v : base.vehicles)
    {
      const auto r = perturb_schedule(base, v.spec.id, -0.5);
      INFO("id " << v.spec.id);
      CHECK_FALSE(r.audit.clean());
    }
  }

  SECTION("lateral overlap from pulling a crossing vehicle forward")
  {
    bool found = false;
    for (const auto& v : base.vehicles)
    {
      if (v.schedule.binding != BindingCase::Lateral)
        continue;
      const auto r = perturb_schedule(base, v.spec.id, -2.0);
      found = found || has_kind(r.audit, FindingKind::LateralOverlap);
    }
    CHECK(found);
  }

  SECTION("doubled safe distance")
  {
    SimRun strict = base;
    strict.config.geometry.min_safe_distance *= 2.0;
    CHECK_FALSE(audit_run(strict).clean());
  }
}

TEST_CASE("audit is invariant under row order")
{
  SimConfig c;
  c.seed = 8;
  const auto base = run(c);
  const auto faulty = perturb_schedule(base, 10, -0.5);
  auto rows = faulty.samples;
  std::mt19937_64 rng(1);
  std::shuffle(rows.begin(), rows.end(), rng);
  const auto shuffled = audit_samples(rows, c.geometry, c.tolerances);
  REQUIRE(shuffled.findings.size() == faulty.audit.findings.size());
  for (std::size_t i = 0; i < shuffled.findings.size(); ++i)
  {
    CHECK(shuffled.findings[i].kind == faulty.audit.findings[i].kind);
    CHECK(shuffled.findings[i].id == faulty.audit.findings[i].id);
  }
}

TEST_CASE("configuration validation names the field")
{
  const auto field_of = [](const SimConfig& c) {
    try
    {
      c.validate();
    }
    catch (const ValidationError& e)
    {
      return e.field();
    }
    return std::string();
  };
  SimConfig c;
  CHECK(field_of(c).empty());
  c.arrival_rate = 0.0;
  CHECK(field_of(c) == "arrival_rate");
  c = {};
  c.speed_hi = 14.0;
  CHECK(field_of(c) == "speed_hi");
  c = {};
  c.turn_weights = {0.5, 0.5, 0.5};
  CHECK(field_of(c) == "turn_weights");
  c = {};
  c.vehicle_count = 0;
  CHECK(field_of(c) == "vehicle_count");
  c = {};
  c.geometry.min_safe_distance = 0.0;
  CHECK(field_of(c) == "min_safe_distance");
  CHECK_THROWS_AS(run(c), ValidationError);
}

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
#include <cavint/sim.hpp>

#include <benchmark/benchmark.h>

#include <map>

using namespace cavint;

namespace {

const SimRun& reference_run(int count)
{
  static std::map<int, SimRun> cache;
  auto it = cache.find(count);
  if (it == cache.end())
  {
    SimConfig c;
    c.vehicle_count = count;
    c.seed = 7;
    it = cache.emplace(count, run(c)).first;
  }
  return it->second;
}

MzBoundary left_turn()
{
  const IntersectionGeometry g;
  const Movement m{Arm::West, Turn::Left};
  MzBoundary b;
  b.tf = turn_time(m, g);
  b.vm = b.vf = mz_exit_speed(m, g);
  b.p_start = g.cz_length;
  b.p_end = g.cz_length + path_length(m, g);
  return b;
}

void BM_SampleSerial(benchmark::State& state)
{
  const SimRun& r = reference_run(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_states_serial(r.vehicles, 0.01));
}

void BM_SampleParallel(benchmark::State& state)
{
  const SimRun& r = reference_run(static_cast<int>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sample_states(r.vehicles, 0.01));
}

void BM_SweepSerial(benchmark::State& state)
{
  const MzBoundary b = left_turn();
  const auto grid = default_weight_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_serial(b, grid, 1.0 / 9.0, 0.01));
}

void BM_SweepParallel(benchmark::State& state)
{
  const MzBoundary b = left_turn();
  const auto grid = default_weight_grid(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep(b, grid, 1.0 / 9.0, 0.01));
}

} // anonymous namespace

BENCHMARK(BM_SampleSerial)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampleParallel)->Arg(30)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(50)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

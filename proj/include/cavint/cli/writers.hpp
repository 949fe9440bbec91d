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

#ifndef CAVINT__CLI__WRITERS_HPP
#define CAVINT__CLI__WRITERS_HPP

#include <cavint/pareto.hpp>
#include <cavint/sim.hpp>

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace cavint::cli {

/// Nine significant digits, shortest form.
std::string format_number(double x);

/// Header: t,id,arm,turn,zone,p,v,u,j
void write_trajectories(std::ostream& out, std::span<const StateSample> samples);

/// Header: id,t0,tm,tf,vm,vf,binding_case,e,s,l,o
void write_schedule(std::ostream& out, std::span<const VehicleRecord> vehicles);

/// Header: w,fuel,discomfort,on_frontier
void write_pareto(std::ostream& out, const ParetoRun& run);

/// Findings, binding-case histogram and per-vehicle bound violations.
nlohmann::json audit_document(const SimRun& run);

struct RunManifest
{
  std::string command;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string version;
  std::vector<std::string> outputs;
};

nlohmann::json manifest_document(const RunManifest& manifest);

/// Writes a JSON document with two-space indentation and a final newline.
void write_json(const std::filesystem::path& path, const nlohmann::json& document);

} // namespace cavint::cli

#endif // CAVINT__CLI__WRITERS_HPP

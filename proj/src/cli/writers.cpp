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

#include <cavint/cli/writers.hpp>

#include <fstream>
#include <iterator>

#include <fmt/format.h>

namespace cavint::cli {

using nlohmann::json;

namespace {

std::string optional_id(const std::optional<int>& id)
{
  return id ? std::to_string(*id) : std::string();
}

// Rounds through the printed form so JSON and CSV agree.
double rounded(double x)
{
  return std::stod(format_number(x));
}

} // anonymous namespace

//==============================================================================
std::string format_number(double x)
{
  if (x == 0.0)
    return "0";
  return fmt::format("{:.9g}", x);
}

//==============================================================================
void write_trajectories(std::ostream& out, std::span<const StateSample> samples)
{
  std::string buffer = "t,id,arm,turn,zone,p,v,u,j\n";
  for (const auto& s : samples)
  {
    fmt::format_to(std::back_inserter(buffer), "{},{},{},{},{},{},{},{},{}\n",
      format_number(s.t), s.id, to_string(s.arm), to_string(s.turn),
      to_string(s.zone), format_number(s.p), format_number(s.v),
      format_number(s.u), format_number(s.j));
  }
  out << buffer;
}

//==============================================================================
void write_schedule(std::ostream& out, std::span<const VehicleRecord> vehicles)
{
  out << "id,t0,tm,tf,vm,vf,binding_case,e,s,l,o\n";
  for (const auto& v : vehicles)
  {
    const Schedule& s = v.schedule;
    out << fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n",
      s.id, format_number(s.t0), format_number(s.tm), format_number(s.tf),
      format_number(s.vm), format_number(s.vf), to_string(s.binding),
      optional_id(s.predecessors.e), optional_id(s.predecessors.s),
      optional_id(s.predecessors.l), optional_id(s.predecessors.o));
  }
}

//==============================================================================
void write_pareto(std::ostream& out, const ParetoRun& run)
{
  out << "w,fuel,discomfort,on_frontier\n";
  for (std::size_t i = 0; i < run.points.size(); ++i)
  {
    const auto& p = run.points[i];
    out << fmt::format("{},{},{},{}\n",
      format_number(p.w), format_number(p.fuel), format_number(p.discomfort),
      run.on_frontier(i) ? 1 : 0);
  }
}

//==============================================================================
json audit_document(const SimRun& run)
{
  json findings = json::array();
  for (const auto& f : run.audit.findings)
  {
    findings.push_back({
      {"kind", std::string(to_string(f.kind))},
      {"id", f.id},
      {"other", f.other},
      {"time", rounded(f.time)},
      {"value", rounded(f.value)},
      {"limit", rounded(f.limit)}});
  }

  json histogram = json::object();
  const auto counts = run.binding_histogram();
  for (std::size_t i = 0; i < counts.size(); ++i)
    histogram[std::string(to_string(static_cast<BindingCase>(i)))] = counts[i];

  json bounds = json::array();
  for (const auto& v : run.vehicles)
  {
    for (const auto& issue : v.feasibility.issues)
    {
      bounds.push_back({
        {"id", v.spec.id},
        {"kind", std::string(to_string(issue.kind))},
        {"time", rounded(issue.time)},
        {"value", rounded(issue.value)},
        {"limit", rounded(issue.limit)}});
    }
  }

  return json{
    {"clean", run.audit.clean()},
    {"findings", findings},
    {"binding_histogram", histogram},
    {"bound_violations", bounds},
    {"vehicles", run.vehicles.size()}};
}

//==============================================================================
json manifest_document(const RunManifest& m)
{
  return json{
    {"command", m.command},
    {"config_digest", m.config_digest},
    {"seed", m.seed},
    {"version", m.version},
    {"outputs", m.outputs},
    {"schema_version", 1}};
}

//==============================================================================
void write_json(const std::filesystem::path& path, const json& document)
{
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write " + path.string());
  out << document.dump(2) << '\n';
}

} // namespace cavint::cli

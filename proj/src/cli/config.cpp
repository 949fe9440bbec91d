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

#include <cavint/cli/config.hpp>
#include <cavint/pareto.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include <fmt/format.h>

namespace cavint::cli {

using nlohmann::json;

namespace {

// Reads one JSON object and remembers which keys were consumed so that
// leftovers can be reported.
class Section
{
public:
  Section(const json& node, std::string path)
  : _node(node),
    _path(std::move(path))
  {
    if (!_node.is_object())
      throw ValidationError(_path.empty() ? "config" : _path, "must be an object");
  }

  std::string field(const std::string& key) const
  {
    return _path.empty() ? key : _path + "." + key;
  }

  bool has(const std::string& key) const { return _node.contains(key); }

  const json* get(const std::string& key)
  {
    _seen.insert(key);
    auto it = _node.find(key);
    return it == _node.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out)
  {
    if (const json* v = get(key))
    {
      if (!v->is_number())
        throw ValidationError(field(key), "must be a number");
      out = v->get<double>();
    }
  }

  template <typename Int>
  void integer(const std::string& key, Int& out)
  {
    if (const json* v = get(key))
    {
      if (!v->is_number_integer())
        throw ValidationError(field(key), "must be an integer");
      if (v->is_number_unsigned())
        out = static_cast<Int>(v->get<std::uint64_t>());
      else
      {
        const auto x = v->get<std::int64_t>();
        if (x < 0 && !std::is_signed_v<Int>)
          throw ValidationError(field(key), "must not be negative");
        out = static_cast<Int>(x);
      }
    }
  }

  std::optional<std::string> string(const std::string& key)
  {
    if (const json* v = get(key))
    {
      if (!v->is_string())
        throw ValidationError(field(key), "must be a string");
      return v->get<std::string>();
    }
    return std::nullopt;
  }

  std::optional<Section> child(const std::string& key)
  {
    if (const json* v = get(key))
      return Section(*v, field(key));
    return std::nullopt;
  }

  void finish() const
  {
    for (const auto& [key, value] : _node.items())
    {
      if (!_seen.count(key))
        throw ValidationError(field(key), "unknown key");
    }
  }

private:
  const json& _node;
  std::string _path;
  std::set<std::string> _seen;
};

void read_geometry(Section s, IntersectionGeometry& g)
{
  s.number("cz_length", g.cz_length);
  s.number("mz_side", g.mz_side);
  s.number("left_path_length", g.left_path_length);
  s.number("right_path_length", g.right_path_length);
  s.number("min_safe_distance", g.min_safe_distance);
  s.number("v_min", g.v_min);
  s.number("v_max", g.v_max);
  s.number("u_min", g.u_min);
  s.number("u_max", g.u_max);
  s.number("v_straight", g.v_straight);
  s.number("v_left", g.v_left);
  s.number("v_right", g.v_right);

  if (auto mode = s.string("turn_time_mode"))
  {
    if (*mode == "table")
      g.turn_time_mode = TurnTimeMode::Table;
    else if (*mode == "formula")
      g.turn_time_mode = TurnTimeMode::Formula;
    else
      throw ValidationError(s.field("turn_time_mode"), "expected \"table\" or \"formula\"");
  }

  if (auto t = s.child("turn_time"))
  {
    t->number("left", g.turn_time_left);
    t->number("straight", g.turn_time_straight);
    t->number("right", g.turn_time_right);
    t->finish();
  }

  if (auto f = s.child("formula"))
  {
    TurnFormulaParameters p;
    f->number("radius_left_ft", p.radius_left_ft);
    f->number("radius_right_ft", p.radius_right_ft);
    f->number("side_friction", p.side_friction);
    f->number("superelevation", p.superelevation);
    f->finish();
    g.formula = p;
  }
  s.finish();
}

void read_arrivals(Section s, SimConfig& c)
{
  const bool has_rates = s.has("arm_rates");
  if (has_rates && (s.has("rate") || s.has("arm_weights")))
    throw ValidationError(s.field("arm_rates"),
      "cannot be combined with rate or arm_weights");

  s.number("rate", c.arrival_rate);
  if (auto w = s.child("arm_weights"))
  {
    for (const Arm a : all_arms)
      w->number(std::string(to_string(a)), c.arm_weights[static_cast<std::size_t>(a)]);
    w->finish();
  }

  if (auto r = s.child("arm_rates"))
  {
    std::array<double, 4> rates{};
    for (const Arm a : all_arms)
      r->number(std::string(to_string(a)), rates[static_cast<std::size_t>(a)]);
    r->finish();

    double total = 0.0;
    for (const double x : rates)
    {
      if (!(x >= 0.0))
        throw ValidationError(s.field("arm_rates"), "entries must be non-negative");
      total += x;
    }
    if (!(total > 0.0))
      throw ValidationError(s.field("arm_rates"), "total rate must be positive");
    c.arrival_rate = total;
    for (std::size_t i = 0; i < 4; ++i)
      c.arm_weights[i] = rates[i] / total;
  }

  if (auto w = s.child("turn_weights"))
  {
    for (const Turn t : all_turns)
      w->number(std::string(to_string(t)), c.turn_weights[static_cast<std::size_t>(t)]);
    w->finish();
  }

  s.number("speed_lo", c.speed_lo);
  s.number("speed_hi", c.speed_hi);
  s.integer("count", c.vehicle_count);
  s.integer("seed", c.seed);
  s.finish();
}

void read_mz(Section s, MzPolicy& mz)
{
  if (auto o = s.string("objective"))
  {
    const auto parsed = parse_objective(*o);
    if (!parsed)
      throw ValidationError(s.field("objective"),
        "expected \"fuel\", \"jerk\" or \"weighted\"");
    mz.objective = *parsed;
  }
  s.number("w", mz.w);
  s.number("jerk_scale", mz.jerk_scale);
  s.number("u_end", mz.u_end);
  s.number("exponent_cap", mz.exponent_cap);
  s.finish();
}

void read_pareto(Section s, ParetoSettings& p)
{
  if (auto b = s.string("boundary"))
  {
    const auto turn = parse_turn(*b);
    if (!turn)
      throw ValidationError(s.field("boundary"),
        "expected \"left\", \"straight\" or \"right\"");
    p.boundary = *turn;
  }

  if (const json* grid = s.get("grid"))
  {
    const std::string field = s.field("grid");
    if (grid->is_array())
    {
      std::vector<double> values;
      for (const auto& v : *grid)
      {
        if (!v.is_number())
          throw ValidationError(field, "entries must be numbers");
        values.push_back(v.get<double>());
      }
      p.grid_values = std::move(values);
    }
    else
    {
      Section g(*grid, field);
      g.integer("count", p.grid_count);
      g.number("lo", p.grid_lo);
      g.number("hi", p.grid_hi);
      g.finish();
    }
  }
  s.finish();
}

// Config paths of the fields named by SimConfig::validate().
std::string config_path(const std::string& field)
{
  static const std::map<std::string, std::string> paths{
    {"arrival_rate", "arrivals.rate"},
    {"speed_lo", "arrivals.speed_lo"},
    {"speed_hi", "arrivals.speed_hi"},
    {"turn_weights", "arrivals.turn_weights"},
    {"arm_weights", "arrivals.arm_weights"},
    {"vehicle_count", "arrivals.count"},
    {"sample_step", "sampling.step"},
    {"admission_margin", "admission.margin"},
    {"admission_step", "admission.step"},
    {"tolerances.gap", "audit.gap_tol"},
    {"tolerances.time", "audit.time_tol"},
    {"mz.jerk_scale", "mz.jerk_scale"},
    {"mz.exponent_cap", "mz.exponent_cap"},
    {"mz.w", "mz.w"},
  };
  auto it = paths.find(field);
  if (it != paths.end())
    return it->second;
  return "geometry." + field;
}

void validate_pareto(const ParetoSettings& p)
{
  if (p.grid_values)
  {
    if (p.grid_values->empty())
      throw ValidationError("pareto.grid", "must not be empty");
    return;
  }
  if (p.grid_count == 0)
    throw ValidationError("pareto.grid.count", "must be at least 1");
  if (!(p.grid_lo > 0.0 && p.grid_lo < 1.0))
    throw ValidationError("pareto.grid.lo", "must lie in (0, 1)");
  if (!(p.grid_hi > 0.0 && p.grid_hi < 1.0))
    throw ValidationError("pareto.grid.hi", "must lie in (0, 1)");
  if (!(p.grid_lo < p.grid_hi) && p.grid_count > 1)
    throw ValidationError("pareto.grid.lo", "must be below pareto.grid.hi");
}

} // anonymous namespace

//==============================================================================
std::vector<double> ParetoSettings::grid() const
{
  if (grid_values)
    return *grid_values;
  return default_weight_grid(grid_count, grid_lo, grid_hi);
}

//==============================================================================
Config parse_config(const json& document)
{
  Config c;
  Section root(document, "");

  if (auto s = root.child("geometry"))
    read_geometry(*s, c.sim.geometry);
  if (auto s = root.child("arrivals"))
    read_arrivals(*s, c.sim);
  if (auto s = root.child("mz"))
    read_mz(*s, c.sim.mz);
  if (auto s = root.child("sampling"))
  {
    s->number("step", c.sim.sample_step);
    s->finish();
  }
  if (auto s = root.child("admission"))
  {
    s->number("margin", c.sim.admission_margin);
    s->number("step", c.sim.admission_step);
    s->finish();
  }
  if (auto s = root.child("audit"))
  {
    s->number("gap_tol", c.sim.tolerances.gap);
    s->number("time_tol", c.sim.tolerances.time);
    s->finish();
  }
  if (auto s = root.child("pareto"))
    read_pareto(*s, c.pareto);
  root.finish();

  try
  {
    c.sim.validate();
  }
  catch (const ValidationError& e)
  {
    const std::string what = e.what();
    const std::string detail = what.substr(what.find(": ") + 2);
    throw ValidationError(config_path(e.field()), detail);
  }
  validate_pareto(c.pareto);
  return c;
}

//==============================================================================
Config load_config(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in)
    throw ValidationError("config", "cannot open " + path.string());

  json document;
  try
  {
    document = json::parse(in);
  }
  catch (const json::parse_error& e)
  {
    throw ValidationError("config", std::string("malformed JSON: ") + e.what());
  }
  return parse_config(document);
}

//==============================================================================
Config resolve_config(const std::optional<std::filesystem::path>& path)
{
  if (path)
    return load_config(*path);
  if (const char* env = std::getenv(config_env_var); env && *env)
    return load_config(env);
  return parse_config(json::object());
}

//==============================================================================
json to_json(const Config& c)
{
  const auto& g = c.sim.geometry;
  json geometry{
    {"cz_length", g.cz_length},
    {"mz_side", g.mz_side},
    {"left_path_length", g.left_path_length},
    {"right_path_length", g.right_path_length},
    {"min_safe_distance", g.min_safe_distance},
    {"v_min", g.v_min},
    {"v_max", g.v_max},
    {"u_min", g.u_min},
    {"u_max", g.u_max},
    {"v_straight", g.v_straight},
    {"v_left", g.v_left},
    {"v_right", g.v_right},
    {"turn_time_mode", g.turn_time_mode == TurnTimeMode::Table ? "table" : "formula"},
    {"turn_time", {
      {"left", g.turn_time_left},
      {"straight", g.turn_time_straight},
      {"right", g.turn_time_right}}},
  };
  if (g.formula)
  {
    geometry["formula"] = {
      {"radius_left_ft", g.formula->radius_left_ft},
      {"radius_right_ft", g.formula->radius_right_ft},
      {"side_friction", g.formula->side_friction},
      {"superelevation", g.formula->superelevation}};
  }

  json arm_weights = json::object();
  for (const Arm a : all_arms)
    arm_weights[std::string(to_string(a))] = c.sim.arm_weights[static_cast<std::size_t>(a)];
  json turn_weights = json::object();
  for (const Turn t : all_turns)
    turn_weights[std::string(to_string(t))] = c.sim.turn_weights[static_cast<std::size_t>(t)];

  json pareto{{"boundary", std::string(to_string(c.pareto.boundary))}};
  if (c.pareto.grid_values)
    pareto["grid"] = *c.pareto.grid_values;
  else
    pareto["grid"] = {
      {"count", c.pareto.grid_count},
      {"lo", c.pareto.grid_lo},
      {"hi", c.pareto.grid_hi}};

  return json{
    {"geometry", geometry},
    {"arrivals", {
      {"rate", c.sim.arrival_rate},
      {"arm_weights", arm_weights},
      {"turn_weights", turn_weights},
      {"speed_lo", c.sim.speed_lo},
      {"speed_hi", c.sim.speed_hi},
      {"count", c.sim.vehicle_count},
      {"seed", c.sim.seed}}},
    {"mz", {
      {"objective", std::string(to_string(c.sim.mz.objective))},
      {"w", c.sim.mz.w},
      {"jerk_scale", c.sim.mz.jerk_scale},
      {"u_end", c.sim.mz.u_end},
      {"exponent_cap", c.sim.mz.exponent_cap}}},
    {"sampling", {{"step", c.sim.sample_step}}},
    {"admission", {
      {"margin", c.sim.admission_margin},
      {"step", c.sim.admission_step}}},
    {"audit", {
      {"gap_tol", c.sim.tolerances.gap},
      {"time_tol", c.sim.tolerances.time}}},
    {"pareto", pareto},
  };
}

//==============================================================================
std::string digest(const json& document)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const unsigned char ch : document.dump())
  {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return fmt::format("fnv1a64:{:016x}", h);
}

} // namespace cavint::cli

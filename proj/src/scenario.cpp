/**
 * Copyright 2026 The uavsc Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License"); you may not
 * use this file except in compliance with the License. You may obtain a copy of
 * the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
 * WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
 * License for the specific language governing permissions and limitations under
 * the License.
 */

#include "uavsc/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <random>
#include <sstream>

#include "uavsc/errors.hpp"
#include "uavsc/text_util.hpp"

namespace uavsc {

namespace {

constexpr double kGridUnitM = 100.0;
constexpr double kSpeedMps = 20.0;
constexpr double kDeltaT = 5.0;

ScenarioSpec make(std::string name, int n, int size, Rect target, std::optional<double> range,
                  double t_max, int s_max, std::optional<int> k_max, Topology topology) {
  ScenarioSpec spec;
  spec.name = std::move(name);
  spec.num_uavs = n;
  spec.grid_width = size;
  spec.grid_height = size;
  spec.target = target;
  spec.comm_range = range;
  spec.t_max = t_max;
  spec.s_max = s_max;
  spec.delta_t = kDeltaT;
  spec.grid_unit_m = kGridUnitM;
  spec.speed_mps = kSpeedMps;
  spec.k_max = k_max;
  spec.topology = topology;
  return spec;
}

// Unbiased draw in [0, bound) from the raw 64-bit engine output. The standard
// distributions are implementation-defined, which would break bit-exact
// placements across toolchains.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t r = rng();
    if (r < limit) return r % bound;
  }
}

Position random_cell(std::mt19937_64& rng, const ScenarioSpec& spec) {
  const auto x = uniform_below(rng, static_cast<std::uint64_t>(spec.grid_width));
  const auto y = uniform_below(rng, static_cast<std::uint64_t>(spec.grid_height));
  return {static_cast<double>(x), static_cast<double>(y)};
}

}  // namespace

std::string_view topology_name(Topology topology) {
  switch (topology) {
    case Topology::kPointToPoint:
      return "point-to-point";
    case Topology::kTriangle:
      return "triangle";
    case Topology::kStar:
      return "star";
    case Topology::kHierarchical:
      return "hierarchical";
  }
  return "hierarchical";
}

Topology parse_topology(std::string_view name) {
  for (auto t : {Topology::kPointToPoint, Topology::kTriangle, Topology::kStar,
                 Topology::kHierarchical}) {
    if (topology_name(t) == name) return t;
  }
  throw ConfigError("unknown topology: " + std::string(name));
}

ScenarioSpec preset(std::string_view name) {
  if (name == "simple") {
    return make("simple", 2, 10, {8, 9, 8, 9}, std::nullopt, 75, 15, std::nullopt,
                Topology::kPointToPoint);
  }
  if (name == "standard") {
    return make("standard", 3, 15, {12, 14, 12, 14}, std::nullopt, 125, 25, std::nullopt,
                Topology::kTriangle);
  }
  if (name == "complex") {
    return make("complex", 5, 20, {16, 19, 16, 19}, std::nullopt, 160, 32, std::nullopt,
                Topology::kStar);
  }
  if (name == "extreme") {
    return make("extreme", 8, 25, {18, 23, 18, 23}, 7.0, 200, 40, 4, Topology::kHierarchical);
  }
  throw UnknownScenarioError(std::string(name));
}

void validate(const ScenarioSpec& spec) {
  auto fail = [&](const std::string& why) {
    throw ConfigError("invalid scenario '" + spec.name + "': " + why);
  };
  if (spec.num_uavs < 2) fail("num_uavs must be >= 2");
  if (spec.grid_width < 1 || spec.grid_height < 1) fail("grid must be non-empty");
  const Rect& r = spec.target;
  if (r.x_min > r.x_max || r.y_min > r.y_max) fail("target rectangle is empty");
  if (r.x_min < 0 || r.y_min < 0 || r.x_max > spec.grid_width - 1 ||
      r.y_max > spec.grid_height - 1) {
    fail("target rectangle leaves the grid");
  }
  if (spec.s_max < 1) fail("s_max must be >= 1");
  if (!(spec.delta_t > 0.0)) fail("delta_t must be > 0");
  if (spec.t_max < spec.delta_t) fail("t_max must be >= delta_t");
  if (!(spec.grid_unit_m > 0.0)) fail("grid_unit_m must be > 0");
  if (spec.speed_mps * spec.delta_t != spec.grid_unit_m) {
    fail("speed_mps * delta_t must equal grid_unit_m (one grid unit per step)");
  }
  if (spec.comm_range && !(*spec.comm_range > 0.0)) fail("comm_range must be > 0");
  if (spec.k_max && *spec.k_max < 1) fail("k_max must be >= 1");
  switch (spec.topology) {
    case Topology::kPointToPoint:
      if (spec.num_uavs != 2) fail("point-to-point topology needs exactly 2 UAVs");
      break;
    case Topology::kTriangle:
      if (spec.num_uavs != 3) fail("triangle topology needs exactly 3 UAVs");
      break;
    case Topology::kStar:
    case Topology::kHierarchical:
      break;
  }
}

ScenarioSpec ablation_spec(const ScenarioSpec& base, int num_uavs) {
  if (base.topology != Topology::kHierarchical) {
    throw ConfigError("size ablation requires the hierarchical (extreme) scenario");
  }
  if (num_uavs < kMinAblationUavs || num_uavs > kMaxAblationUavs) {
    throw RangeError("swarm size " + std::to_string(num_uavs) + " outside [" +
                     std::to_string(kMinAblationUavs) + ", " +
                     std::to_string(kMaxAblationUavs) + "]");
  }
  ScenarioSpec spec = base;
  spec.num_uavs = num_uavs;
  const ScenarioSpec original = preset("extreme");
  if (num_uavs != original.num_uavs) spec.name = "extreme-n" + std::to_string(num_uavs);
  return spec;
}

Role role_of(const ScenarioSpec& spec, UavId id) {
  if (id == 1) return Role::kCommander;
  if (spec.topology == Topology::kHierarchical && (id == 2 || id == 3)) return Role::kRelay;
  return Role::kExecutor;
}

std::vector<UavId> first_hop_ids(const ScenarioSpec& spec) {
  if (spec.topology == Topology::kHierarchical) return relay_ids(spec);
  std::vector<UavId> ids;
  for (UavId id = 2; id <= spec.num_uavs; ++id) ids.push_back(id);
  return ids;
}

std::vector<UavId> relay_ids(const ScenarioSpec& spec) {
  std::vector<UavId> ids;
  if (spec.topology != Topology::kHierarchical) return ids;
  for (UavId id = 2; id <= std::min(3, spec.num_uavs); ++id) ids.push_back(id);
  return ids;
}

std::vector<Position> sample_positions(const ScenarioSpec& spec, PlacementSeed seed) {
  validate(spec);
  std::mt19937_64 rng(seed.seed);
  std::vector<Position> positions(static_cast<std::size_t>(spec.num_uavs));
  positions[0] = random_cell(rng, spec);

  const auto relays = relay_ids(spec);
  int attempts = 0;
  while (true) {
    for (UavId id : relays) positions[id - 1] = random_cell(rng, spec);
    bool clique = true;
    if (spec.comm_range) {
      std::vector<UavId> group = {1};
      group.insert(group.end(), relays.begin(), relays.end());
      for (std::size_t a = 0; a < group.size() && clique; ++a) {
        for (std::size_t b = a + 1; b < group.size() && clique; ++b) {
          clique = distance(positions[group[a] - 1], positions[group[b] - 1]) < *spec.comm_range;
        }
      }
    }
    if (clique) break;
    if (++attempts >= kPlacementAttemptBudget) {
      throw InfeasiblePlacementError("could not place commander and relays within comm_range after " +
                                     std::to_string(kPlacementAttemptBudget) + " attempts");
    }
  }

  const auto first_free = static_cast<std::size_t>(1 + relays.size());
  for (std::size_t i = first_free; i < positions.size(); ++i) positions[i] = random_cell(rng, spec);
  return positions;
}

std::vector<UavState> make_swarm(const ScenarioSpec& spec, const std::vector<Position>& positions) {
  if (positions.size() != static_cast<std::size_t>(spec.num_uavs)) {
    throw ConfigError("expected " + std::to_string(spec.num_uavs) + " positions, got " +
                      std::to_string(positions.size()));
  }
  std::vector<UavState> swarm(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    swarm[i].id = static_cast<UavId>(i + 1);
    swarm[i].role = role_of(spec, swarm[i].id);
    swarm[i].pos = positions[i];
  }
  return swarm;
}

std::string presets_table() {
  std::ostringstream out;
  out << "scenario\tnum_uavs\tenv_size\ttarget_area\tcomm_range\tmax_time_s\tmax_steps\n";
  for (auto name : kPresetNames) {
    const ScenarioSpec s = preset(name);
    char range[32] = "Full Range";
    if (s.comm_range) std::snprintf(range, sizeof(range), "%.1f grids", *s.comm_range);
    out << s.name << "\t" << s.num_uavs << "\t" << s.grid_width << "x" << s.grid_height << "\t["
        << s.target.x_min << "," << s.target.x_max << "]x[" << s.target.y_min << ","
        << s.target.y_max << "]\t" << range << "\t" << format_number(s.t_max) << "\t" << s.s_max
        << "\n";
  }
  return out.str();
}

std::string to_config_text(const ScenarioSpec& spec) {
  std::ostringstream out;
  out << "name = " << spec.name << "\n";
  out << "num_uavs = " << spec.num_uavs << "\n";
  out << "grid_width = " << spec.grid_width << "\n";
  out << "grid_height = " << spec.grid_height << "\n";
  out << "target = " << spec.target.x_min << " " << spec.target.x_max << " " << spec.target.y_min
      << " " << spec.target.y_max << "\n";
  out << "comm_range = " << (spec.comm_range ? format_number(*spec.comm_range) : "unlimited")
      << "\n";
  out << "t_max = " << format_number(spec.t_max) << "\n";
  out << "s_max = " << spec.s_max << "\n";
  out << "delta_t = " << format_number(spec.delta_t) << "\n";
  out << "grid_unit_m = " << format_number(spec.grid_unit_m) << "\n";
  out << "speed_mps = " << format_number(spec.speed_mps) << "\n";
  out << "k_max = " << (spec.k_max ? std::to_string(*spec.k_max) : "none") << "\n";
  out << "topology = " << topology_name(spec.topology) << "\n";
  return out.str();
}

ScenarioSpec parse_config_text(std::string_view text) {
  std::map<std::string, std::string, std::less<>> values;
  int line_no = 0;
  for (const auto& raw_line : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    values[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  auto take = [&](std::string_view key) -> const std::string& {
    auto it = values.find(key);
    if (it == values.end()) throw ConfigError("missing scenario key: " + std::string(key));
    return it->second;
  };
  auto as_int = [&](std::string_view key) { return static_cast<int>(parse_int(take(key), key)); };

  ScenarioSpec spec;
  spec.name = take("name");
  spec.num_uavs = as_int("num_uavs");
  spec.grid_width = as_int("grid_width");
  spec.grid_height = as_int("grid_height");
  std::vector<int> rect;
  std::istringstream rect_in(take("target"));
  for (std::string tok; rect_in >> tok;) rect.push_back(static_cast<int>(parse_int(tok, "target")));
  if (rect.size() != 4) throw ConfigError("target needs four integers: x_min x_max y_min y_max");
  spec.target = {rect[0], rect[1], rect[2], rect[3]};
  const auto& range = take("comm_range");
  if (range != "unlimited") spec.comm_range = parse_double(range, "comm_range");
  spec.t_max = parse_double(take("t_max"), "t_max");
  spec.s_max = as_int("s_max");
  spec.delta_t = parse_double(take("delta_t"), "delta_t");
  spec.grid_unit_m = parse_double(take("grid_unit_m"), "grid_unit_m");
  spec.speed_mps = parse_double(take("speed_mps"), "speed_mps");
  const auto& k = take("k_max");
  if (k != "none") spec.k_max = static_cast<int>(parse_int(k, "k_max"));
  spec.topology = parse_topology(take("topology"));
  validate(spec);
  return spec;
}

}  // namespace uavsc

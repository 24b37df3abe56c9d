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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uavsc/swarm.hpp"

namespace uavsc {

enum class Topology { kPointToPoint, kTriangle, kStar, kHierarchical };

std::string_view topology_name(Topology topology);
Topology parse_topology(std::string_view name);

/// Every parameter of one scenario. `comm_range` and `k_max` are empty when
/// the scenario has full-range connectivity and no fan-out cap.
struct ScenarioSpec {
  std::string name;
  int num_uavs = 0;
  int grid_width = 0;
  int grid_height = 0;
  Rect target;
  std::optional<double> comm_range;
  double t_max = 0.0;
  int s_max = 0;
  double delta_t = 0.0;
  double grid_unit_m = 0.0;
  double speed_mps = 0.0;
  std::optional<int> k_max;
  Topology topology = Topology::kPointToPoint;

  friend bool operator==(const ScenarioSpec&, const ScenarioSpec&) = default;
};

struct PlacementSeed {
  std::uint64_t seed = 0;
};

inline constexpr std::array<std::string_view, 4> kPresetNames = {"simple", "standard", "complex",
                                                                 "extreme"};
inline constexpr int kMinAblationUavs = 2;
inline constexpr int kMaxAblationUavs = 16;
inline constexpr int kPlacementAttemptBudget = 100000;

/// Throws UnknownScenarioError for names outside kPresetNames.
ScenarioSpec preset(std::string_view name);

/// Throws ConfigError when an invariant of ScenarioSpec does not hold.
void validate(const ScenarioSpec& spec);

/// Extreme-scenario variant with a different swarm size. The name keeps
/// "extreme" for the original size and becomes "extreme-n<N>" otherwise.
ScenarioSpec ablation_spec(const ScenarioSpec& base, int num_uavs);

/// Role of UAV `id` under the scenario's topology: UAV-1 commands, UAV-2 and
/// UAV-3 relay in hierarchical swarms, everyone else executes.
Role role_of(const ScenarioSpec& spec, UavId id);

/// Ids that UAV-1 reaches directly at t=1.
std::vector<UavId> first_hop_ids(const ScenarioSpec& spec);

/// Relays (hierarchical only), ascending.
std::vector<UavId> relay_ids(const ScenarioSpec& spec);

/// Uniform integer cells over the whole grid, deterministic in the seed.
/// Hierarchical swarms resample the relays until UAV-1 and the relays are
/// pairwise closer than comm_range.
std::vector<Position> sample_positions(const ScenarioSpec& spec, PlacementSeed seed);

/// Swarm in its initial state: roles assigned, nobody has received yet.
std::vector<UavState> make_swarm(const ScenarioSpec& spec, const std::vector<Position>& positions);

/// Tab-separated table of the four presets: scenario, UAV count, map size,
/// target area, communication range, max time and max steps.
std::string presets_table();

/// Flat key = value text; the target is written as four integers.
std::string to_config_text(const ScenarioSpec& spec);
ScenarioSpec parse_config_text(std::string_view text);

}  // namespace uavsc

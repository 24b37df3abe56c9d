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

#include <optional>
#include <vector>

#include "uavsc/compressor.hpp"
#include "uavsc/prompting.hpp"
#include "uavsc/scenario.hpp"
#include "uavsc/swarm.hpp"

namespace uavsc {

/// State of one propagation run. Single owner, advanced tick by tick.
///
/// Tick semantics:
///  - t = 1: UAV-1 delivers the compressed message to its first-hop set
///    (relays in hierarchical swarms, every other UAV in the fixed
///    topologies). Range is not checked here.
///  - t = 2: each relay, in id order, sends to its eligible neighbours.
///  - t >= 3: every UAV that held the message at the start of the tick, has
///    not arrived and is not on standby, in id order, first rebroadcasts and
///    then moves one grid unit toward the target.
/// The run stops after the first tick with t * delta_t >= t_max or t = s_max;
/// UAVs that never received the message are then put on standby.
struct SimulationRun {
  ScenarioSpec spec;
  std::vector<UavState> swarm;
  std::vector<TransmissionRecord> log;
  int tick = 0;
  Message m_raw;
  Message m_zip;
  bool terminated = false;

  const UavState& uav(UavId id) const { return swarm.at(static_cast<std::size_t>(id - 1)); }
  UavState& uav(UavId id) { return swarm.at(static_cast<std::size_t>(id - 1)); }
};

/// Renders the raw task, compresses it once with `engine` and marks only the
/// commander as having received it. Engine errors propagate unchanged.
SimulationRun initialize(const ScenarioSpec& spec, const std::vector<Position>& positions,
                         CompressionEngine& engine,
                         const PromptTemplates& templates = default_templates());

/// Up to `k_max` UAVs that have not received, are within `range` of `sender`
/// and were never offered the message by `sender`; nearest first, ties by
/// ascending id. Empty `range` / `k_max` mean unlimited.
std::vector<UavId> select_recipients(const UavState& sender, const std::vector<UavState>& swarm,
                                     std::optional<int> k_max, std::optional<double> range);

/// Last tick the loop executes: min(s_max, ceil(t_max / delta_t)).
int final_tick(const ScenarioSpec& spec);

/// Advances one tick. Throws std::logic_error if the run has terminated.
void step(SimulationRun& run);

/// Steps until termination and applies standby elimination.
void run_to_completion(SimulationRun& run);

}  // namespace uavsc

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

#include "uavsc/protocol.hpp"

#include <algorithm>
#include <stdexcept>

#include "uavsc/movement.hpp"

namespace uavsc {

namespace {

void deliver(SimulationRun& run, UavId sender, const std::vector<UavId>& recipients) {
  for (UavId to : recipients) {
    run.log.push_back({run.tick, sender, to, run.m_zip.byte_len()});
    run.uav(to).received = true;
    run.uav(sender).sent_to.insert(to);
  }
}

void broadcast(SimulationRun& run, UavId sender) {
  deliver(run, sender,
          select_recipients(run.uav(sender), run.swarm, run.spec.k_max, run.spec.comm_range));
}

bool limits_reached(const ScenarioSpec& spec, int tick) {
  return static_cast<double>(tick) * spec.delta_t >= spec.t_max || tick >= spec.s_max;
}

}  // namespace

SimulationRun initialize(const ScenarioSpec& spec, const std::vector<Position>& positions,
                         CompressionEngine& engine, const PromptTemplates& templates) {
  validate(spec);
  SimulationRun run;
  run.spec = spec;
  run.swarm = make_swarm(spec, positions);
  run.m_raw = render_raw_task(spec, positions, templates);
  run.m_zip = engine.compress(run.m_raw, render_system_prompt(spec, run.swarm, 0, templates));
  run.uav(1).received = true;
  return run;
}

std::vector<UavId> select_recipients(const UavState& sender, const std::vector<UavState>& swarm,
                                     std::optional<int> k_max, std::optional<double> range) {
  std::vector<std::pair<double, UavId>> candidates;
  for (const auto& other : swarm) {
    if (other.id == sender.id || other.received || other.standby) continue;
    if (sender.sent_to.contains(other.id)) continue;
    const double d = distance(sender.pos, other.pos);
    if (range && !(d < *range)) continue;
    candidates.emplace_back(d, other.id);
  }
  std::sort(candidates.begin(), candidates.end());
  if (k_max && candidates.size() > static_cast<std::size_t>(*k_max)) {
    candidates.resize(static_cast<std::size_t>(*k_max));
  }
  std::vector<UavId> ids;
  ids.reserve(candidates.size());
  for (const auto& [d, id] : candidates) ids.push_back(id);
  return ids;
}

int final_tick(const ScenarioSpec& spec) {
  int t = 1;
  while (!limits_reached(spec, t)) ++t;
  return t;
}

void step(SimulationRun& run) {
  if (run.terminated) throw std::logic_error("step() on a terminated run");
  ++run.tick;

  if (run.tick == 1) {
    std::vector<UavId> first_hop;
    for (UavId id : first_hop_ids(run.spec)) {
      if (!run.uav(id).received) first_hop.push_back(id);
    }
    deliver(run, 1, first_hop);
  } else if (run.tick == 2) {
    for (UavId relay : relay_ids(run.spec)) {
      if (run.uav(relay).received) broadcast(run, relay);
    }
  } else {
    // Only UAVs holding the message when the tick starts act in it.
    std::vector<UavId> active;
    for (const auto& u : run.swarm) {
      if (u.received && !u.standby) active.push_back(u.id);
    }
    for (UavId id : active) {
      if (in_target(run.uav(id).pos, run.spec.target)) continue;
      broadcast(run, id);
      run.uav(id).pos = step_toward(run.uav(id).pos, run.spec.target);
    }
  }

  if (limits_reached(run.spec, run.tick)) {
    run.terminated = true;
    for (auto& u : run.swarm) u.standby = !u.received;
  }
}

void run_to_completion(SimulationRun& run) {
  while (!run.terminated) step(run);
}

}  // namespace uavsc

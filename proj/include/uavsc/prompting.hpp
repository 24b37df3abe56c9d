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

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "uavsc/scenario.hpp"
#include "uavsc/swarm.hpp"

namespace uavsc {

/// Template texts with `{name}` placeholders. Lines starting with '#' are
/// comments and never reach the rendered output.
struct PromptTemplates {
  std::string system_template;
  std::string raw_task_template;
  std::map<Role, std::string> instruction_templates;
};

/// The templates compiled into the binary from templates/*.tmpl.
const PromptTemplates& default_templates();

/// Reads system_prompt.tmpl, raw_task.tmpl and instruction_<role>.tmpl from
/// `dir`. Throws ConfigError when a file is missing.
PromptTemplates load_templates(const std::filesystem::path& dir);

/// Substitutes every `{key}` whose key is in `values`; other braces are kept
/// verbatim so JSON templates need no escaping. Comment lines are dropped and
/// trailing newlines trimmed.
std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values);

/// JSON document with the map size, tick, per-UAV role/position and
/// constraints. Identical for every UAV at a given tick.
std::string render_system_prompt(const ScenarioSpec& spec, const std::vector<UavState>& swarm,
                                 int tick, const PromptTemplates& templates = default_templates());

std::string render_instruction_prompt(Role role, UavId id, const ScenarioSpec& spec,
                                      const PromptTemplates& templates = default_templates());

/// {"instruction_prompt": {"UAV-1": ..., ...}} for the whole swarm.
std::string render_instruction_block(const ScenarioSpec& spec,
                                     const PromptTemplates& templates = default_templates());

/// Full task text given to the commander: map, target, velocity, initial positions.
Message render_raw_task(const ScenarioSpec& spec, const std::vector<Position>& positions,
                        const PromptTemplates& templates = default_templates());

}  // namespace uavsc

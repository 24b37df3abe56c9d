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

#include "uavsc/prompting.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "default_templates.inc"
#include "uavsc/errors.hpp"
#include "uavsc/text_util.hpp"

namespace uavsc {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string uav_label(UavId id) { return "UAV-" + std::to_string(id); }

// Integral coordinates render as JSON integers so positions read [5, 8].
ordered_json json_number(double v) {
  if (v == static_cast<double>(static_cast<long long>(v))) return static_cast<long long>(v);
  return v;
}

std::string join_labels(const std::vector<UavId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += (i + 1 == ids.size()) ? " and " : ", ";
    out += uav_label(ids[i]);
  }
  return out;
}

std::string constraints_text(const ScenarioSpec& spec) {
  if (!spec.comm_range && !spec.k_max) return "none";
  std::string out;
  if (spec.comm_range) out += "comm_range < " + format_number(*spec.comm_range) + " grid units";
  if (spec.k_max) {
    if (!out.empty()) out += "; ";
    out += "k_max = " + std::to_string(*spec.k_max) + " recipients per send";
  }
  return out;
}

std::string communication_text(const ScenarioSpec& spec) {
  std::string out;
  if (spec.comm_range) {
    out = "radius " + format_number(*spec.comm_range) + " grid units";
  } else {
    out = "full range";
  }
  if (spec.k_max) out += ", at most " + std::to_string(*spec.k_max) + " recipients per send";
  out += ", " + std::string(topology_name(spec.topology)) + " topology";
  return out;
}

std::map<std::string, std::string> rect_values(const Rect& r) {
  return {{"x_min", std::to_string(r.x_min)},
          {"x_max", std::to_string(r.x_max)},
          {"y_min", std::to_string(r.y_min)},
          {"y_max", std::to_string(r.y_max)}};
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read template " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Integer cells are zero-padded to the widest coordinate of the grid so the
// raw task length depends on the scenario only, not on the placement.
std::string coordinate_text(double v, int width) {
  if (v >= 0.0 && v == std::floor(v)) {
    std::string digits = std::to_string(static_cast<long long>(v));
    if (static_cast<int>(digits.size()) < width) digits.insert(0, width - digits.size(), '0');
    return digits;
  }
  return format_number(v);
}

bool is_key_char(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_'; }

}  // namespace

const PromptTemplates& default_templates() {
  static const PromptTemplates templates = [] {
    PromptTemplates t;
    t.system_template = std::string(templates_generated::kSystemPrompt);
    t.raw_task_template = std::string(templates_generated::kRawTask);
    t.instruction_templates[Role::kCommander] =
        std::string(templates_generated::kInstructionCommander);
    t.instruction_templates[Role::kRelay] = std::string(templates_generated::kInstructionRelay);
    t.instruction_templates[Role::kExecutor] =
        std::string(templates_generated::kInstructionExecutor);
    return t;
  }();
  return templates;
}

PromptTemplates load_templates(const std::filesystem::path& dir) {
  PromptTemplates t;
  t.system_template = read_file(dir / "system_prompt.tmpl");
  t.raw_task_template = read_file(dir / "raw_task.tmpl");
  t.instruction_templates[Role::kCommander] = read_file(dir / "instruction_commander.tmpl");
  t.instruction_templates[Role::kRelay] = read_file(dir / "instruction_relay.tmpl");
  t.instruction_templates[Role::kExecutor] = read_file(dir / "instruction_executor.tmpl");
  return t;
}

std::string render_template(std::string_view tmpl, const std::map<std::string, std::string>& values) {
  std::string body;
  for (const auto& line : split(tmpl, '\n')) {
    if (!line.empty() && line.front() == '#') continue;
    body += line;
    body += '\n';
  }
  while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) body.pop_back();

  std::string out;
  out.reserve(body.size());
  std::size_t i = 0;
  while (i < body.size()) {
    if (body[i] == '{') {
      std::size_t j = i + 1;
      while (j < body.size() && is_key_char(body[j])) ++j;
      if (j < body.size() && body[j] == '}' && j > i + 1) {
        auto it = values.find(body.substr(i + 1, j - i - 1));
        if (it != values.end()) {
          out += it->second;
          i = j + 1;
          continue;
        }
      }
    }
    out += body[i++];
  }
  return out;
}

std::string render_system_prompt(const ScenarioSpec& spec, const std::vector<UavState>& swarm,
                                 int tick, const PromptTemplates& templates) {
  ordered_json positions = ordered_json::object();
  for (const auto& uav : swarm) {
    positions[uav_label(uav.id)] = {{"role", std::string(role_name(uav.role))},
                                    {"position", {json_number(uav.pos.x), json_number(uav.pos.y)}}};
  }
  const std::string map_text =
      std::to_string(spec.grid_width) + "x" + std::to_string(spec.grid_height) + " grid";
  return render_template(templates.system_template,
                         {{"map", ordered_json(map_text).dump()},
                          {"current_time_step", std::to_string(tick)},
                          {"uav_positions", positions.dump()},
                          {"constraints", ordered_json(constraints_text(spec)).dump()}});
}

std::string render_instruction_prompt(Role role, UavId id, const ScenarioSpec& spec,
                                      const PromptTemplates& templates) {
  auto values = rect_values(spec.target);
  values["id"] = std::to_string(id);
  values["recipients"] = join_labels(first_hop_ids(spec));
  const auto it = templates.instruction_templates.find(role);
  if (it == templates.instruction_templates.end()) {
    throw ConfigError("no instruction template for role " + std::string(role_name(role)));
  }
  return render_template(it->second, values);
}

std::string render_instruction_block(const ScenarioSpec& spec, const PromptTemplates& templates) {
  ordered_json block = ordered_json::object();
  for (UavId id = 1; id <= spec.num_uavs; ++id) {
    block[uav_label(id)] = render_instruction_prompt(role_of(spec, id), id, spec, templates);
  }
  return ordered_json{{"instruction_prompt", block}}.dump(2);
}

Message render_raw_task(const ScenarioSpec& spec, const std::vector<Position>& positions,
                        const PromptTemplates& templates) {
  const int width = static_cast<int>(
      std::to_string(std::max(spec.grid_width, spec.grid_height) - 1).size());
  std::string roles;
  std::string pos_text;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    const auto id = static_cast<UavId>(i + 1);
    if (i > 0) {
      roles += "; ";
      pos_text += "; ";
    }
    roles += uav_label(id) + " " + std::string(role_name(role_of(spec, id)));
    pos_text += uav_label(id) + " (" + coordinate_text(positions[i].x, width) + "," +
                coordinate_text(positions[i].y, width) + ")";
  }
  auto values = rect_values(spec.target);
  values["num_uavs"] = std::to_string(spec.num_uavs);
  values["grid_width"] = std::to_string(spec.grid_width);
  values["grid_height"] = std::to_string(spec.grid_height);
  values["grid_unit_m"] = format_number(spec.grid_unit_m);
  values["delta_t"] = format_number(spec.delta_t);
  values["speed_mps"] = format_number(spec.speed_mps);
  values["communication"] = communication_text(spec);
  values["roles"] = roles;
  values["positions"] = pos_text;
  values["t_max"] = format_number(spec.t_max);
  values["s_max"] = std::to_string(spec.s_max);
  return Message(render_template(templates.raw_task_template, values));
}

}  // namespace uavsc

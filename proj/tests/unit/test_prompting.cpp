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

#include <filesystem>
#include <fstream>
#include <regex>

#include "doctest.h"
#include "json.hpp"
#include "uavsc/errors.hpp"
#include "uavsc/prompting.hpp"

using namespace uavsc;

namespace {

std::size_t count_pairs(const std::string& text) {
  static const std::regex pair_re(R"(\(\d+,\d+\))");
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(text.begin(), text.end(), pair_re), std::sregex_iterator()));
}

}  // namespace

TEST_SUITE("prompting") {
  TEST_CASE("system prompt for the extreme scenario") {
    const auto spec = preset("extreme");
    const auto swarm = make_swarm(spec, sample_positions(spec, {12}));
    const auto text = render_system_prompt(spec, swarm, 12);
    CHECK(text.find(R"("current_time_step": 12)") != std::string::npos);
    CHECK(text.find(R"("map": "25x25 grid")") != std::string::npos);

    const auto json = nlohmann::json::parse(text);
    const auto& sp = json.at("system_prompt");
    CHECK(sp.at("uav_positions").size() == 8);
    CHECK(sp.at("uav_positions").at("UAV-1").at("role") == "commander");
    CHECK(sp.at("uav_positions").at("UAV-2").at("role") == "relay");
    CHECK(sp.at("uav_positions").at("UAV-4").at("role") == "executor");
    CHECK(sp.at("uav_positions").at("UAV-1").at("position").at(0) == swarm[0].pos.x);
    CHECK(sp.at("constraints").get<std::string>().find("7") != std::string::npos);
    CHECK(text == render_system_prompt(spec, swarm, 12));
    CHECK(nlohmann::json::parse(text).dump() == json.dump());
  }

  TEST_CASE("system prompt for the simple scenario") {
    const auto spec = preset("simple");
    const auto swarm = make_swarm(spec, sample_positions(spec, {1}));
    const auto json = nlohmann::json::parse(render_system_prompt(spec, swarm, 0));
    CHECK(json["system_prompt"]["map"] == "10x10 grid");
    CHECK(json["system_prompt"]["current_time_step"] == 0);
    CHECK(json["system_prompt"]["uav_positions"].size() == 2);
    CHECK(json["system_prompt"]["constraints"] == "none");
  }

  TEST_CASE("system prompt parses for every preset and tick") {
    for (auto name : kPresetNames) {
      const auto spec = preset(name);
      const auto swarm = make_swarm(spec, sample_positions(spec, {7}));
      for (int tick : {0, 1, 2, 17, spec.s_max}) {
        CHECK(nlohmann::json::accept(render_system_prompt(spec, swarm, tick)));
      }
    }
  }

  TEST_CASE("instruction prompts by role") {
    const auto spec = preset("extreme");
    const auto commander = render_instruction_prompt(Role::kCommander, 1, spec);
    CHECK(commander.find("UAV-1") != std::string::npos);
    CHECK(commander.find("UAV-2") != std::string::npos);
    CHECK(commander.find("UAV-3") != std::string::npos);
    CHECK(commander.find("[18,23]") != std::string::npos);

    const auto executor = render_instruction_prompt(Role::kExecutor, 4, spec);
    CHECK(executor.find("UAV-4") != std::string::npos);
    CHECK(executor.find("carry out the rescue") != std::string::npos);
    CHECK(executor.find("forward") == std::string::npos);

    const auto relay = render_instruction_prompt(Role::kRelay, 2, spec);
    CHECK(relay.find("UAV-2") != std::string::npos);
    CHECK(relay.find("forward") != std::string::npos);
    CHECK(relay.find("fly to the target area") != std::string::npos);

    const auto block = nlohmann::json::parse(render_instruction_block(spec));
    CHECK(block["instruction_prompt"].size() == 8);
    CHECK(block["instruction_prompt"]["UAV-3"].get<std::string>().find("relay") != std::string::npos);
    CHECK(render_instruction_prompt(Role::kCommander, 1, preset("simple")).find("UAV-2") !=
          std::string::npos);
  }

  TEST_CASE("raw task contents") {
    const auto spec = preset("extreme");
    const auto positions = sample_positions(spec, {3});
    const auto raw = render_raw_task(spec, positions);
    CHECK(raw.text().find("[18,23]") != std::string::npos);
    CHECK(raw.text().find("25x25") != std::string::npos);
    CHECK(raw.text().find("20 m/s") != std::string::npos);
    CHECK(count_pairs(raw.text()) == 8);
    CHECK(raw == render_raw_task(spec, positions));
    CHECK(raw.byte_len() == raw.text().size());
    CHECK(raw.text().find('#') == std::string::npos);

    const auto simple = preset("simple");
    CHECK(count_pairs(render_raw_task(simple, sample_positions(simple, {3})).text()) == 2);
  }

  TEST_CASE("raw task length depends only on the scenario") {
    for (auto name : kPresetNames) {
      const auto spec = preset(name);
      const auto len = render_raw_task(spec, sample_positions(spec, {0})).byte_len();
      for (std::uint64_t seed = 1; seed < 200; ++seed) {
        CHECK(render_raw_task(spec, sample_positions(spec, {seed})).byte_len() == len);
      }
    }
  }

  TEST_CASE("template rendering") {
    CHECK(render_template("# comment\n{a} and {b} {unknown} {\"json\": 1}\n\n", {{"a", "A"}, {"b", "B"}}) ==
          "A and B {unknown} {\"json\": 1}");
    CHECK(render_template("{}", {}) == "{}");
    CHECK(render_template("{a}{a}", {{"a", "x"}}) == "xx");
  }

  TEST_CASE("templates load from disk") {
    const auto dir = std::filesystem::temp_directory_path() / "uavsc_templates_test";
    std::filesystem::create_directories(dir);
    auto write = [&](const char* name, const std::string& body) {
      std::ofstream(dir / name) << body;
    };
    write("system_prompt.tmpl", "{\"map\": {map}}");
    write("raw_task.tmpl", "Go to [{x_min},{x_max}]x[{y_min},{y_max}].");
    write("instruction_commander.tmpl", "C{id}");
    write("instruction_relay.tmpl", "R{id}");
    write("instruction_executor.tmpl", "E{id}");
    const auto t = load_templates(dir);
    const auto spec = preset("extreme");
    CHECK(render_raw_task(spec, sample_positions(spec, {1}), t).text() == "Go to [18,23]x[18,23].");
    CHECK(render_instruction_prompt(Role::kRelay, 3, spec, t) == "R3");
    std::filesystem::remove(dir / "instruction_relay.tmpl");
    CHECK_THROWS_AS(load_templates(dir), ConfigError);
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("shipped templates match the compiled-in defaults") {
    const auto dir = std::filesystem::path(UAVSC_SOURCE_DIR) / "templates";
    const auto t = load_templates(dir);
    CHECK(t.system_template == default_templates().system_template);
    CHECK(t.raw_task_template == default_templates().raw_task_template);
    CHECK(t.instruction_templates == default_templates().instruction_templates);
  }
}

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

// Command-line driver: scenario presets, single experiments and the two
// ablation sweeps.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "uavsc/errors.hpp"
#include "uavsc/runner.hpp"
#include "uavsc/scenario.hpp"

namespace {

struct Flags {
  std::string scenario = "extreme";
  std::string scenario_file;
  std::string config_file;
  std::string formats = "json,csv";
  std::string bu_counting = "per-link";
  std::string templates;
  std::string sizes = "2,3,4,5,6,7,8,9,10,11,12,13,14,15,16";
};

void add_common(CLI::App* cmd, uavsc::ExperimentConfig& cfg, Flags& flags) {
  cmd->add_option("--engine", cfg.engine, "identity | template | fixed-ratio:<rho> | remote")
      ->capture_default_str();
  cmd->add_option("--scorer", cfg.scorer, "lexical | remote")->capture_default_str();
  cmd->add_option("--trials", cfg.trials, "Trials per configuration")->capture_default_str();
  cmd->add_option("--seed", cfg.base_seed, "Base seed; trial i uses seed + i")
      ->capture_default_str();
  cmd->add_option("--out-dir", cfg.out_dir, "Output directory")->capture_default_str();
  cmd->add_option("--workers", cfg.workers, "Parallel trial workers")->capture_default_str();
  cmd->add_option("--formats", flags.formats, "Comma-separated subset of json,csv")
      ->capture_default_str();
  cmd->add_option("--bu-counting", flags.bu_counting, "per-link | per-send")
      ->capture_default_str();
  cmd->add_option("--templates", flags.templates, "Directory with prompt templates");
  cmd->add_option("--config", flags.config_file,
                  "key = value file; its entries override command-line flags");

  cmd->add_option("--endpoint", cfg.remote_engine.endpoint, "Chat-completion base URL")
      ->capture_default_str();
  cmd->add_option("--model", cfg.remote_engine.model, "Remote model identifier")
      ->capture_default_str();
  cmd->add_option("--token-env", cfg.remote_engine.token_env,
                  "Environment variable holding the API token")
      ->capture_default_str();
  cmd->add_option("--timeout", cfg.remote_engine.timeout_s, "Request timeout (s)")
      ->capture_default_str();
  cmd->add_option("--retries", cfg.remote_engine.max_retries, "Retries on transient failures")
      ->capture_default_str();
  cmd->add_option("--temperature", cfg.remote_engine.temperature)->capture_default_str();
  cmd->add_option("--max-in-flight", cfg.remote_engine.max_in_flight)->capture_default_str();
  cmd->add_option("--sp-url", cfg.remote_scorer.url, "Scoring service base URL")
      ->capture_default_str();
}

void finish_config(uavsc::ExperimentConfig& cfg, const Flags& flags, bool scenario_flags) {
  std::string overrides;
  if (scenario_flags) {
    overrides += flags.scenario_file.empty() ? "scenario = " + flags.scenario + "\n"
                                             : "scenario_file = " + flags.scenario_file + "\n";
  }
  overrides += "formats = " + flags.formats + "\n";
  overrides += "bu_counting = " + flags.bu_counting + "\n";
  if (!flags.templates.empty()) overrides += "templates = " + flags.templates + "\n";
  uavsc::apply_config_text(cfg, overrides);

  if (!flags.config_file.empty()) {
    std::ifstream in(flags.config_file);
    if (!in) throw uavsc::ConfigError("cannot read config file " + flags.config_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    uavsc::apply_config_text(cfg, ss.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV swarm semantic-compression simulator"};
  app.require_subcommand(1);

  uavsc::ExperimentConfig cfg;
  Flags flags;

  auto* presets = app.add_subcommand("presets", "Print the scenario presets");
  std::string show;
  presets->add_option("--show", show, "Print one preset as an editable scenario file");

  auto* run = app.add_subcommand("run", "Run one scenario for several seeded trials");
  run->add_option("--scenario", flags.scenario, "simple | standard | complex | extreme")
      ->capture_default_str();
  run->add_option("--scenario-file", flags.scenario_file, "Scenario file (overrides --scenario)");
  add_common(run, cfg, flags);

  auto* complexity = app.add_subcommand("ablate-complexity", "Run all four presets");
  add_common(complexity, cfg, flags);

  auto* size = app.add_subcommand("ablate-size", "Sweep the extreme scenario over swarm sizes");
  size->add_option("--sizes", flags.sizes, "Comma-separated swarm sizes in [2, 16]")
      ->capture_default_str();
  size->add_flag("--unlimited-range", cfg.unlimited_range, "Drop the communication radius");
  add_common(size, cfg, flags);

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets->parsed()) {
      std::cout << (show.empty() ? uavsc::presets_table()
                                 : uavsc::to_config_text(uavsc::preset(show)));
      return 0;
    }
    if (run->parsed()) {
      finish_config(cfg, flags, true);
      uavsc::run_experiment(cfg, &std::cout);
    } else if (complexity->parsed()) {
      finish_config(cfg, flags, false);
      uavsc::run_complexity_ablation(cfg, &std::cout);
    } else if (size->parsed()) {
      uavsc::apply_config_text(cfg, "sizes = " + flags.sizes + "\n");
      finish_config(cfg, flags, false);
      uavsc::run_size_ablation(cfg, &std::cout);
    }
  } catch (const uavsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

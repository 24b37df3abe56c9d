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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "uavsc/compressor.hpp"
#include "uavsc/metrics.hpp"
#include "uavsc/prompting.hpp"
#include "uavsc/protocol.hpp"
#include "uavsc/scenario.hpp"
#include "uavsc/scorer.hpp"

namespace uavsc {

struct ExperimentConfig {
  ScenarioSpec scenario = preset("extreme");
  std::string engine = "identity";
  RemoteEngineConfig remote_engine;
  std::string scorer = "lexical";
  RemoteScorerConfig remote_scorer;
  int trials = 10;
  std::uint64_t base_seed = 0;
  std::filesystem::path out_dir = "results";
  bool write_json = true;
  bool write_csv = true;
  int workers = 1;
  BandwidthParams bandwidth;
  BuCounting bu_counting = BuCounting::kPerLink;
  std::optional<std::filesystem::path> templates_dir;
  /// Size ablation only.
  std::vector<int> sizes;
  bool unlimited_range = false;

  void validate() const;
};

/// Applies `key = value` lines on top of `config` (used for --config files,
/// which take precedence over command-line flags).
void apply_config_text(ExperimentConfig& config, std::string_view text);

struct TrialResult {
  int index = 0;
  std::uint64_t seed = 0;
  std::vector<Position> initial_positions;
  SimulationRun run;
  TrialMetrics metrics;
  std::optional<std::string> sp_error;
};

struct ExperimentResult {
  ScenarioSpec spec;
  std::string engine_name;
  std::string scorer_name;
  std::vector<TrialResult> trials;
  AggregateMetrics aggregate;
};

/// One seeded trial: placement, propagation, metrics. Engine errors
/// propagate; scorer errors leave SP empty and are recorded in sp_error.
TrialResult run_trial(const ScenarioSpec& spec, std::uint64_t seed, CompressionEngine& engine,
                      SemanticScorer& scorer, const PromptTemplates& templates,
                      const BandwidthParams& bandwidth = {},
                      BuCounting counting = BuCounting::kPerLink);

/// Runs `trials` trials with seeds base_seed + i on a worker pool and writes
/// out_dir/trials/trial_NNN.json and out_dir/aggregate.csv. When `table` is
/// set, a human-readable aggregate table is printed to it.
ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* table = nullptr);

/// All four presets; per-scenario outputs go to out_dir/<scenario>/ and the
/// 4x4 scenario-by-metric means to out_dir/heatmap.csv.
std::vector<ExperimentResult> run_complexity_ablation(const ExperimentConfig& config,
                                                      std::ostream* table = nullptr);

/// Extreme variants for each size in config.sizes; outputs under
/// out_dir/n<size>/ plus out_dir/size_table.csv.
std::vector<ExperimentResult> run_size_ablation(const ExperimentConfig& config,
                                                std::ostream* table = nullptr);

nlohmann::ordered_json trial_to_json(const TrialResult& trial, const std::string& engine_name,
                                     const std::string& scorer_name);

std::string aggregate_csv_header();
std::string aggregate_csv_row(const ExperimentResult& result);

}  // namespace uavsc

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

#include "uavsc/runner.hpp"

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "uavsc/errors.hpp"
#include "uavsc/text_util.hpp"

namespace uavsc {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json position_json(const Position& p) { return ordered_json::array({p.x, p.y}); }

std::string csv_number(double v) { return format_number(v); }

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << content;
}

std::string trial_file_name(int index) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "trial_%03d.json", index);
  return buf;
}

std::string size_dir_name(int n) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "n%02d", n);
  return buf;
}

void print_table_header(std::ostream& os) {
  os << std::left << std::setw(14) << "scenario" << std::right << std::setw(8) << "trials"
     << std::setw(20) << "CR" << std::setw(20) << "SP" << std::setw(24) << "BU"
     << std::setw(20) << "SR" << "\n";
}

std::string mean_pm_std(const MetricSummary& s, int precision) {
  std::ostringstream os;
  os << std::setprecision(precision) << std::fixed << s.mean << " +/- " << s.std;
  return os.str();
}

void print_table_row(std::ostream& os, const ExperimentResult& r) {
  std::ostringstream bu;
  bu << std::scientific << std::setprecision(3) << r.aggregate.bu.mean << " +/- "
     << r.aggregate.bu.std;
  os << std::left << std::setw(14) << r.spec.name << std::right << std::setw(8)
     << r.aggregate.trials << std::setw(20) << mean_pm_std(r.aggregate.cr, 3) << std::setw(20)
     << (r.aggregate.sp ? mean_pm_std(*r.aggregate.sp, 3) : std::string("n/a"))
     << std::setw(24) << bu.str() << std::setw(20) << mean_pm_std(r.aggregate.sr, 3) << "\n";
}

PromptTemplates templates_for(const ExperimentConfig& config) {
  return config.templates_dir ? load_templates(*config.templates_dir) : default_templates();
}

ExperimentResult execute(const ExperimentConfig& config, const ScenarioSpec& spec,
                         CompressionEngine& engine, SemanticScorer& scorer,
                         const PromptTemplates& templates, const std::filesystem::path& out_dir) {
  const int n = config.trials;
  std::vector<std::optional<TrialResult>> results(static_cast<std::size_t>(n));
  std::vector<std::string> errors(static_cast<std::size_t>(n));
  std::atomic<int> next{0};

  auto worker = [&] {
    for (int i = next++; i < n; i = next++) {
      const auto seed = config.base_seed + static_cast<std::uint64_t>(i);
      try {
        auto r = run_trial(spec, seed, engine, scorer, templates, config.bandwidth,
                           config.bu_counting);
        r.index = i;
        results[static_cast<std::size_t>(i)] = std::move(r);
      } catch (const std::exception& e) {
        errors[static_cast<std::size_t>(i)] = e.what();
      }
    }
  };
  const int workers = std::max(1, std::min(config.workers, n));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
  }

  std::string report;
  for (int i = 0; i < n; ++i) {
    if (!errors[static_cast<std::size_t>(i)].empty()) {
      report += "\n  trial " + std::to_string(i) + " (seed " +
                std::to_string(config.base_seed + static_cast<std::uint64_t>(i)) +
                "): " + errors[static_cast<std::size_t>(i)];
    }
  }
  if (!report.empty()) throw ExperimentError("experiment '" + spec.name + "' aborted:" + report);

  ExperimentResult result;
  result.spec = spec;
  result.engine_name = engine.name();
  result.scorer_name = scorer.name();
  std::vector<TrialMetrics> metrics;
  for (auto& r : results) {
    metrics.push_back(r->metrics);
    result.trials.push_back(std::move(*r));
  }
  result.aggregate = aggregate(metrics);

  if (config.write_json) {
    for (const auto& t : result.trials) {
      write_file(out_dir / "trials" / trial_file_name(t.index),
                 trial_to_json(t, result.engine_name, result.scorer_name).dump(2) + "\n");
    }
  }
  if (config.write_csv) {
    write_file(out_dir / "aggregate.csv", aggregate_csv_header() + aggregate_csv_row(result));
  }
  return result;
}

}  // namespace

void ExperimentConfig::validate() const {
  uavsc::validate(scenario);
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (workers < 1) throw ConfigError("workers must be >= 1");
  if (!(bandwidth.bits_per_second > 0.0) || !(bandwidth.window_s > 0.0)) {
    throw ConfigError("bandwidth B and window T must be > 0");
  }
  for (int n : sizes) {
    if (n < kMinAblationUavs || n > kMaxAblationUavs) {
      throw RangeError("swarm size " + std::to_string(n) + " outside [2, 16]");
    }
  }
}

void apply_config_text(ExperimentConfig& config, std::string_view text) {
  int line_no = 0;
  for (const auto& raw_line : split(text, '\n')) {
    ++line_no;
    const auto line = trim(raw_line);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key == "scenario") {
      config.scenario = preset(value);
    } else if (key == "scenario_file") {
      config.scenario = parse_config_text(read_file(value));
    } else if (key == "engine") {
      config.engine = value;
    } else if (key == "scorer") {
      config.scorer = value;
    } else if (key == "trials") {
      config.trials = static_cast<int>(parse_int(value, key));
    } else if (key == "seed") {
      config.base_seed = static_cast<std::uint64_t>(parse_int(value, key));
    } else if (key == "out_dir") {
      config.out_dir = value;
    } else if (key == "workers") {
      config.workers = static_cast<int>(parse_int(value, key));
    } else if (key == "formats") {
      config.write_json = config.write_csv = false;
      for (const auto& f : split(value, ',')) {
        const auto fmt = trim(f);
        if (fmt == "json") {
          config.write_json = true;
        } else if (fmt == "csv") {
          config.write_csv = true;
        } else {
          throw ConfigError("unknown output format: " + std::string(fmt));
        }
      }
    } else if (key == "templates") {
      config.templates_dir = value;
    } else if (key == "bu_counting") {
      if (value == "per-link") {
        config.bu_counting = BuCounting::kPerLink;
      } else if (value == "per-send") {
        config.bu_counting = BuCounting::kPerSendEvent;
      } else {
        throw ConfigError("bu_counting must be per-link or per-send");
      }
    } else if (key == "bandwidth_bps") {
      config.bandwidth.bits_per_second = parse_double(value, key);
    } else if (key == "window_s") {
      config.bandwidth.window_s = parse_double(value, key);
    } else if (key == "sizes") {
      config.sizes.clear();
      for (const auto& s : split(value, ',')) config.sizes.push_back(static_cast<int>(parse_int(s, key)));
    } else if (key == "unlimited_range") {
      config.unlimited_range = value == "true" || value == "1";
    } else if (key == "endpoint") {
      config.remote_engine.endpoint = value;
    } else if (key == "model") {
      config.remote_engine.model = value;
    } else if (key == "token_env") {
      config.remote_engine.token_env = value;
    } else if (key == "timeout_s") {
      config.remote_engine.timeout_s = parse_double(value, key);
    } else if (key == "retries") {
      config.remote_engine.max_retries = static_cast<int>(parse_int(value, key));
    } else if (key == "temperature") {
      config.remote_engine.temperature = parse_double(value, key);
    } else if (key == "max_in_flight") {
      config.remote_engine.max_in_flight = static_cast<int>(parse_int(value, key));
    } else if (key == "directive") {
      config.remote_engine.directive = value;
    } else if (key == "sp_url") {
      config.remote_scorer.url = value;
    } else if (key == "sp_timeout_s") {
      config.remote_scorer.timeout_s = parse_double(value, key);
    } else if (key == "sp_retries") {
      config.remote_scorer.max_retries = static_cast<int>(parse_int(value, key));
    } else {
      throw ConfigError("unknown config key: " + key);
    }
  }
}

TrialResult run_trial(const ScenarioSpec& spec, std::uint64_t seed, CompressionEngine& engine,
                      SemanticScorer& scorer, const PromptTemplates& templates,
                      const BandwidthParams& bandwidth, BuCounting counting) {
  TrialResult t;
  t.seed = seed;
  t.initial_positions = sample_positions(spec, PlacementSeed{seed});
  t.run = initialize(spec, t.initial_positions, engine, templates);
  run_to_completion(t.run);

  t.metrics.cr = compression_ratio(t.run.m_raw, t.run.m_zip);
  t.metrics.bu = bandwidth_utilization(t.run.log, bandwidth, counting);
  const auto success = success_rate(t.run.swarm, spec.target);
  t.metrics.sr = success.sr;
  t.metrics.n_reach = success.n_reach;
  t.metrics.n_total = success.n_total;
  try {
    t.metrics.sp = scorer.score(t.run.m_raw.text(), t.run.m_zip.text());
  } catch (const ScorerError& e) {
    t.sp_error = e.what();
  }
  return t;
}

ExperimentResult run_experiment(const ExperimentConfig& config, std::ostream* table) {
  config.validate();
  auto engine = make_engine(config.engine, config.remote_engine);
  auto scorer = make_scorer(config.scorer, config.remote_scorer);
  auto result = execute(config, config.scenario, *engine, *scorer, templates_for(config),
                        config.out_dir);
  if (table) {
    print_table_header(*table);
    print_table_row(*table, result);
  }
  return result;
}

std::vector<ExperimentResult> run_complexity_ablation(const ExperimentConfig& config,
                                                      std::ostream* table) {
  config.validate();
  auto engine = make_engine(config.engine, config.remote_engine);
  auto scorer = make_scorer(config.scorer, config.remote_scorer);
  const auto templates = templates_for(config);

  std::vector<ExperimentResult> results;
  std::string heatmap = "scenario,cr,sp,bu,sr\n";
  std::vector<double> srs;
  for (auto name : kPresetNames) {
    const auto spec = preset(name);
    results.push_back(execute(config, spec, *engine, *scorer, templates, config.out_dir / name));
    const auto& agg = results.back().aggregate;
    heatmap += spec.name + "," + csv_number(agg.cr.mean) + "," +
               (agg.sp ? csv_number(agg.sp->mean) : "") + "," + csv_number(agg.bu.mean) + "," +
               csv_number(agg.sr.mean) + "\n";
    srs.push_back(agg.sr.mean);
  }
  if (config.write_csv) {
    write_file(config.out_dir / "heatmap.csv", heatmap);
    write_file(config.out_dir / "global.csv",
               "global_sr\n" + csv_number(global_success_rate(srs)) + "\n");
  }
  if (table) {
    print_table_header(*table);
    for (const auto& r : results) print_table_row(*table, r);
    *table << "global SR: " << std::fixed << std::setprecision(3) << global_success_rate(srs)
           << "\n";
  }
  return results;
}

std::vector<ExperimentResult> run_size_ablation(const ExperimentConfig& config,
                                                std::ostream* table) {
  config.validate();
  if (config.sizes.empty()) throw ConfigError("size ablation needs at least one size");
  auto engine = make_engine(config.engine, config.remote_engine);
  auto scorer = make_scorer(config.scorer, config.remote_scorer);
  const auto templates = templates_for(config);

  std::vector<ExperimentResult> results;
  std::string csv = "num_uavs," + aggregate_csv_header().substr(aggregate_csv_header().find(',') + 1);
  for (int n : config.sizes) {
    auto spec = ablation_spec(preset("extreme"), n);
    if (config.unlimited_range) spec.comm_range.reset();
    results.push_back(
        execute(config, spec, *engine, *scorer, templates, config.out_dir / size_dir_name(n)));
    const auto row = aggregate_csv_row(results.back());
    csv += std::to_string(n) + "," + row.substr(row.find(',') + 1);
  }
  if (config.write_csv) write_file(config.out_dir / "size_table.csv", csv);
  if (table) {
    print_table_header(*table);
    for (const auto& r : results) print_table_row(*table, r);
  }
  return results;
}

ordered_json trial_to_json(const TrialResult& trial, const std::string& engine_name,
                           const std::string& scorer_name) {
  const auto& run = trial.run;
  ordered_json j;
  j["scenario"] = run.spec.name;
  j["trial"] = trial.index;
  j["seed"] = trial.seed;
  j["engine"] = engine_name;
  j["scorer"] = scorer_name;
  j["m_raw"] = run.m_raw.text();
  j["m_zip"] = run.m_zip.text();
  j["raw_bytes"] = run.m_raw.byte_len();
  j["zip_bytes"] = run.m_zip.byte_len();
  j["initial_positions"] = ordered_json::array();
  for (const auto& p : trial.initial_positions) j["initial_positions"].push_back(position_json(p));
  j["final_tick"] = run.tick;
  j["final_swarm"] = ordered_json::array();
  for (const auto& u : run.swarm) {
    j["final_swarm"].push_back({{"id", u.id},
                                {"role", std::string(role_name(u.role))},
                                {"position", position_json(u.pos)},
                                {"received", u.received},
                                {"standby", u.standby},
                                {"sent_to", u.sent_to}});
  }
  j["log"] = ordered_json::array();
  for (const auto& r : run.log) {
    j["log"].push_back(
        {{"tick", r.tick}, {"sender", r.sender}, {"receiver", r.receiver}, {"bytes", r.bytes}});
  }
  const auto& m = trial.metrics;
  j["metrics"] = {{"cr", m.cr},
                  {"sp", m.sp ? ordered_json(*m.sp) : ordered_json(nullptr)},
                  {"bu", m.bu},
                  {"sr", m.sr},
                  {"n_reach", m.n_reach},
                  {"n_total", m.n_total}};
  if (trial.sp_error) j["sp_error"] = *trial.sp_error;
  return j;
}

std::string aggregate_csv_header() {
  return "scenario,trials,mean_cr,std_cr,mean_sp,std_sp,mean_bu,std_bu,mean_sr,std_sr,sp_trials\n";
}

std::string aggregate_csv_row(const ExperimentResult& result) {
  const auto& a = result.aggregate;
  std::string row = result.spec.name + "," + std::to_string(a.trials) + "," +
                    csv_number(a.cr.mean) + "," + csv_number(a.cr.std) + ",";
  row += a.sp ? csv_number(a.sp->mean) + "," + csv_number(a.sp->std) : std::string(",");
  row += "," + csv_number(a.bu.mean) + "," + csv_number(a.bu.std) + "," + csv_number(a.sr.mean) +
         "," + csv_number(a.sr.std) + "," + std::to_string(a.sp_trials) + "\n";
  return row;
}

}  // namespace uavsc

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

// Python bindings for the simulator core.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "uavsc/errors.hpp"
#include "uavsc/metrics.hpp"
#include "uavsc/movement.hpp"
#include "uavsc/runner.hpp"
#include "uavsc/scenario.hpp"
#include "uavsc/scorer.hpp"

namespace py = pybind11;
using namespace uavsc;

namespace {

std::string simulate(const std::string& scenario, std::uint64_t seed, const std::string& engine,
                     const std::string& scorer) {
  auto e = make_engine(engine);
  auto s = make_scorer(scorer);
  TrialResult trial;
  {
    py::gil_scoped_release release;
    trial = run_trial(preset(scenario), seed, *e, *s, default_templates());
  }
  return trial_to_json(trial, e->name(), s->name()).dump();
}

std::string experiment(const std::string& config_text) {
  ExperimentConfig cfg;
  cfg.write_json = false;
  cfg.write_csv = false;
  apply_config_text(cfg, config_text);
  ExperimentResult result;
  {
    py::gil_scoped_release release;
    result = run_experiment(cfg);
  }
  return aggregate_csv_header() + aggregate_csv_row(result);
}

double bu(const std::vector<std::tuple<int, int, int, std::size_t>>& records, double bits_per_second,
          double window_s, bool per_send) {
  std::vector<TransmissionRecord> log;
  for (const auto& [tick, sender, receiver, bytes] : records) log.push_back({tick, sender, receiver, bytes});
  return bandwidth_utilization(log, {bits_per_second, window_s},
                               per_send ? BuCounting::kPerSendEvent : BuCounting::kPerLink);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  py::register_exception<Error>(m, "UavscError");

  m.def("preset_names", [] {
    return std::vector<std::string>(kPresetNames.begin(), kPresetNames.end());
  });
  m.def("presets_table", &presets_table);
  m.def("preset_config", [](const std::string& name) { return to_config_text(preset(name)); },
        py::arg("name"));
  m.def(
      "sample_positions",
      [](const std::string& name, std::uint64_t seed) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : sample_positions(preset(name), {seed})) out.emplace_back(p.x, p.y);
        return out;
      },
      py::arg("scenario"), py::arg("seed"));
  m.def("simulate_json", &simulate, py::arg("scenario"), py::arg("seed"),
        py::arg("engine") = "identity", py::arg("scorer") = "lexical");
  m.def("experiment_csv", &experiment, py::arg("config_text"));

  m.def(
      "compression_ratio",
      [](const std::string& original, const std::string& compressed) {
        return compression_ratio(Message(original), Message(compressed));
      },
      py::arg("original"), py::arg("compressed"));
  m.def("bandwidth_utilization", &bu, py::arg("records"), py::arg("bits_per_second") = 1e6,
        py::arg("window_s") = 60.0, py::arg("per_send_event") = false);
  m.def(
      "lexical_score",
      [](const std::string& a, const std::string& b) { return LexicalScorer().score(a, b); },
      py::arg("original"), py::arg("compressed"));
  m.def(
      "step_toward",
      [](std::pair<double, double> p, std::tuple<int, int, int, int> rect) {
        const auto [x0, x1, y0, y1] = rect;
        const auto q = step_toward({p.first, p.second}, Rect{x0, x1, y0, y1});
        return std::make_pair(q.x, q.y);
      },
      py::arg("position"), py::arg("target"));
}

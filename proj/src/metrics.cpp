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

#include "uavsc/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "uavsc/errors.hpp"

namespace uavsc {

double compression_ratio(const Message& original, const Message& compressed) {
  if (original.byte_len() == 0) throw MetricError("compression ratio undefined for an empty original");
  return static_cast<double>(compressed.byte_len()) / static_cast<double>(original.byte_len());
}

double bandwidth_utilization(std::span<const TransmissionRecord> log,
                             const BandwidthParams& params, BuCounting counting) {
  if (!(params.bits_per_second > 0.0) || !(params.window_s > 0.0)) {
    throw MetricError("bandwidth parameters B and T must be > 0");
  }
  double bits = 0.0;
  if (counting == BuCounting::kPerLink) {
    for (const auto& r : log) bits += static_cast<double>(r.bytes) * 8.0;
  } else {
    std::set<std::pair<int, UavId>> events;
    for (const auto& r : log) {
      if (events.emplace(r.tick, r.sender).second) bits += static_cast<double>(r.bytes) * 8.0;
    }
  }
  return bits / (params.bits_per_second * params.window_s);
}

SuccessCount success_rate(std::span<const UavState> swarm, const Rect& target) {
  SuccessCount out;
  out.n_total = static_cast<int>(swarm.size());
  for (const auto& u : swarm) {
    if (!u.standby && in_target(u.pos, target)) ++out.n_reach;
  }
  out.sr = out.n_total == 0 ? 0.0 : static_cast<double>(out.n_reach) / out.n_total;
  return out;
}

double global_success_rate(std::span<const double> per_scenario) {
  if (per_scenario.size() != 4) {
    throw MetricError("global success rate needs exactly 4 scenario values, got " +
                      std::to_string(per_scenario.size()));
  }
  return (per_scenario[0] + per_scenario[1] + per_scenario[2] + per_scenario[3]) / 4.0;
}

MetricSummary summarize(std::span<const double> values) {
  if (values.empty()) throw MetricError("cannot summarize an empty sample");
  // Shifted by the first sample: constant data gives that constant and a
  // standard deviation of exactly zero.
  const double shift = values.front();
  const auto n = static_cast<double>(values.size());
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double v : values) {
    sum += v - shift;
    sum_sq += (v - shift) * (v - shift);
  }
  MetricSummary s;
  s.mean = shift + sum / n;
  if (values.size() > 1) s.std = std::sqrt(std::max(0.0, (sum_sq - sum * sum / n) / (n - 1.0)));
  return s;
}

AggregateMetrics aggregate(std::span<const TrialMetrics> trials) {
  if (trials.empty()) throw MetricError("aggregate needs at least one trial");
  std::vector<double> cr, sp, bu, sr;
  for (const auto& t : trials) {
    cr.push_back(t.cr);
    bu.push_back(t.bu);
    sr.push_back(t.sr);
    if (t.sp) sp.push_back(*t.sp);
  }
  AggregateMetrics out;
  out.trials = static_cast<int>(trials.size());
  out.sp_trials = static_cast<int>(sp.size());
  out.cr = summarize(cr);
  out.bu = summarize(bu);
  out.sr = summarize(sr);
  if (!sp.empty()) out.sp = summarize(sp);
  return out;
}

}  // namespace uavsc

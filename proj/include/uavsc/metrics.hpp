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
#include <span>
#include <vector>

#include "uavsc/swarm.hpp"

namespace uavsc {

struct BandwidthParams {
  double bits_per_second = 1e6;
  double window_s = 60.0;
};

/// How the numerator of BU counts transmissions.
enum class BuCounting {
  /// Every sender-receiver record contributes its bytes.
  kPerLink,
  /// One contribution per (tick, sender) send event, however many receivers.
  kPerSendEvent,
};

struct TrialMetrics {
  double cr = 0.0;
  std::optional<double> sp;  // absent when the scorer failed
  double bu = 0.0;
  double sr = 0.0;
  int n_reach = 0;
  int n_total = 0;
};

struct MetricSummary {
  double mean = 0.0;
  double std = 0.0;
};

struct AggregateMetrics {
  MetricSummary cr;
  std::optional<MetricSummary> sp;  // over trials with a score; absent if none
  MetricSummary bu;
  MetricSummary sr;
  int trials = 0;
  int sp_trials = 0;
};

/// compressed / original, in bytes. Throws MetricError for an empty original.
double compression_ratio(const Message& original, const Message& compressed);

/// Sum of transmitted bits over B * T.
double bandwidth_utilization(std::span<const TransmissionRecord> log,
                             const BandwidthParams& params = {},
                             BuCounting counting = BuCounting::kPerLink);

struct SuccessCount {
  int n_reach = 0;
  int n_total = 0;
  double sr = 0.0;
};

/// Standby UAVs count toward the total but never as arrivals.
SuccessCount success_rate(std::span<const UavState> swarm, const Rect& target);

/// Mean of exactly four scenario-level success rates.
double global_success_rate(std::span<const double> per_scenario);

/// Mean and sample standard deviation (n - 1 denominator, 0 for one value).
MetricSummary summarize(std::span<const double> values);

AggregateMetrics aggregate(std::span<const TrialMetrics> trials);

}  // namespace uavsc

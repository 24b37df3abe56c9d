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

#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "uavsc/http_client.hpp"
#include "uavsc/swarm.hpp"

namespace uavsc {

/// Turns the raw task into the compressed payload the swarm forwards.
/// `context` is the rendered system prompt at initialization.
class CompressionEngine {
 public:
  virtual ~CompressionEngine() = default;
  virtual Message compress(const Message& raw, std::string_view context) = 0;
  virtual std::string name() const = 0;
};

class IdentityEngine final : public CompressionEngine {
 public:
  Message compress(const Message& raw, std::string_view context) override;
  std::string name() const override { return "identity"; }
};

/// Keeps the first ceil(ratio * len) bytes, backing off to a UTF-8 character
/// boundary and padding with '.' so the output length is exact.
class FixedRatioEngine final : public CompressionEngine {
 public:
  explicit FixedRatioEngine(double ratio);

  Message compress(const Message& raw, std::string_view context) override;
  std::string name() const override;
  double ratio() const noexcept { return ratio_; }

  /// ceil(ratio * len). Products within 1e-9 of an integer snap to it, so
  /// decimal ratios such as 0.2 behave as the exact fraction.
  static std::size_t target_length(double ratio, std::size_t len);

 private:
  double ratio_;
};

/// Rule-based compressor: pulls the target, map, speed, relays and initial
/// positions out of the raw task and emits one pipe-delimited line such as
/// `MAP=25x25|TGT=18,23,18,23|SPD=20|RLY=2,3|POS=...|ACT=GOTO`.
/// Falls back to identity (with a warning) when no target can be found.
class TemplateEngine final : public CompressionEngine {
 public:
  using WarningSink = std::function<void(std::string_view)>;

  explicit TemplateEngine(WarningSink warn = {});

  Message compress(const Message& raw, std::string_view context) override;
  std::string name() const override { return "template"; }

 private:
  WarningSink warn_;
};

struct RemoteEngineConfig {
  /// Base URL of a chat-completion API, e.g. "https://api.openai.com/v1".
  std::string endpoint = "http://127.0.0.1:8000/v1";
  std::string model = "gpt-4o";
  /// Environment variable holding the bearer token. The token itself never
  /// appears in config files or on the command line.
  std::string token_env = "UAVSC_API_KEY";
  double timeout_s = 60.0;
  int max_retries = 3;
  double temperature = 0.0;
  int max_in_flight = 4;
  double initial_backoff_s = 1.0;
  std::string directive = kDefaultDirective;

  static constexpr const char* kDefaultDirective =
      "Compress the following UAV task instruction into the shortest message that still lets "
      "every UAV recover the map size, the target area, the velocity and the initial positions. "
      "Reply with the compressed message only.";

  void validate() const;
};

/// Chat-completion client: system message = context, user message =
/// directive + raw task. Transient failures are retried with exponential
/// backoff; anything left after the retries becomes an EngineError.
class RemoteEngine final : public CompressionEngine {
 public:
  explicit RemoteEngine(RemoteEngineConfig config);

  Message compress(const Message& raw, std::string_view context) override;
  std::string name() const override { return "remote:" + config_.model; }

  /// Request body sent for one compression call.
  std::string request_body(const Message& raw, std::string_view context) const;

 private:
  RemoteEngineConfig config_;
  std::string token_;
  HttpJsonClient client_;
};

/// Parses "identity", "template", "fixed-ratio:<rho>" or "remote". The remote
/// engine takes its settings from `remote`.
std::unique_ptr<CompressionEngine> make_engine(std::string_view selector,
                                               const RemoteEngineConfig& remote = {});

}  // namespace uavsc

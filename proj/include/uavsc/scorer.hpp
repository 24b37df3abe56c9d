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

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "uavsc/http_client.hpp"

namespace uavsc {

/// Semantic similarity between the original instruction and its compressed
/// form, in [0, 1]. score(x, x) is the scorer's maximum.
class SemanticScorer {
 public:
  virtual ~SemanticScorer() = default;
  virtual double score(std::string_view original, std::string_view compressed) = 0;
  virtual std::string name() const = 0;
};

/// Lowercased ASCII alphanumeric runs.
std::vector<std::string> lexical_tokens(std::string_view text);

/// Unigram F1 over token multisets. Empty vs empty is 1, empty vs non-empty 0.
class LexicalScorer final : public SemanticScorer {
 public:
  double score(std::string_view original, std::string_view compressed) override;
  std::string name() const override { return "lexical"; }
};

struct RemoteScorerConfig {
  /// Base URL of the scoring service; requests go to <url>/score.
  std::string url = "http://127.0.0.1:8100";
  double timeout_s = 30.0;
  int max_retries = 3;
  double initial_backoff_s = 0.5;
  int max_in_flight = 1;
  bool rescale = false;
};

/// Client for the BERTScore service: POST /score with {original, compressed,
/// rescale}, reads back {precision, recall, f1} and returns f1. Responses
/// outside [0, 1] are rejected with ScorerError, never clamped.
class RemoteScorer final : public SemanticScorer {
 public:
  explicit RemoteScorer(RemoteScorerConfig config);

  double score(std::string_view original, std::string_view compressed) override;
  std::string name() const override { return "remote"; }

 private:
  RemoteScorerConfig config_;
  HttpJsonClient client_;
};

/// "lexical" or "remote" (configured from `remote`).
std::unique_ptr<SemanticScorer> make_scorer(std::string_view selector,
                                            const RemoteScorerConfig& remote = {});

}  // namespace uavsc

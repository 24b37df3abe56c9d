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

#include "uavsc/scorer.hpp"

#include <cctype>
#include <map>

#include "json.hpp"
#include "uavsc/errors.hpp"

namespace uavsc {

std::vector<std::string> lexical_tokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (char ch : text) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 0x80 && std::isalnum(c)) {
      current += static_cast<char>(std::tolower(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

double LexicalScorer::score(std::string_view original, std::string_view compressed) {
  const auto a = lexical_tokens(original);
  const auto b = lexical_tokens(compressed);
  if (a.empty() && b.empty()) return 1.0;
  if (a.empty() || b.empty()) return 0.0;

  std::map<std::string, std::size_t> counts;
  for (const auto& t : a) ++counts[t];
  std::size_t overlap = 0;
  for (const auto& t : b) {
    auto it = counts.find(t);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++overlap;
    }
  }
  if (overlap == 0) return 0.0;
  const double precision = static_cast<double>(overlap) / static_cast<double>(b.size());
  const double recall = static_cast<double>(overlap) / static_cast<double>(a.size());
  return 2.0 * precision * recall / (precision + recall);
}

RemoteScorer::RemoteScorer(RemoteScorerConfig config)
    : config_(std::move(config)), client_(config_.url, config_.timeout_s, config_.max_in_flight) {
  if (config_.max_retries < 0) throw ConfigError("scorer retries must be >= 0");
}

double RemoteScorer::score(std::string_view original, std::string_view compressed) {
  const nlohmann::ordered_json request = {{"original", std::string(original)},
                                          {"compressed", std::string(compressed)},
                                          {"rescale", config_.rescale}};
  RetryPolicy policy;
  policy.max_retries = config_.max_retries;
  policy.initial_backoff_s = config_.initial_backoff_s;
  const HttpResponse r = client_.post_with_retries("/score", request.dump(), {}, policy);

  const std::string tries = " after " + std::to_string(r.attempts) + " attempt(s)";
  if (r.outcome == HttpResponse::Outcome::kTimeout) {
    throw ScorerError(ScorerError::Kind::kTimeout, "score request timed out" + tries);
  }
  if (r.outcome == HttpResponse::Outcome::kConnectionFailed) {
    throw ScorerError(ScorerError::Kind::kTransport,
                      "scoring service unreachable (" + r.error + ")" + tries);
  }
  if (r.status != 200) {
    throw ScorerError(ScorerError::Kind::kHttpStatus,
                      "scoring service returned HTTP " + std::to_string(r.status) + tries);
  }
  double f1 = 0.0;
  try {
    f1 = nlohmann::json::parse(r.body).at("f1").get<double>();
  } catch (const nlohmann::json::exception& e) {
    throw ScorerError(ScorerError::Kind::kBadResponse,
                      std::string("malformed score response: ") + e.what());
  }
  if (!(f1 >= 0.0 && f1 <= 1.0)) {
    throw ScorerError(ScorerError::Kind::kOutOfRange,
                      "scoring service returned f1 outside [0, 1]: " + std::to_string(f1));
  }
  return f1;
}

std::unique_ptr<SemanticScorer> make_scorer(std::string_view selector,
                                            const RemoteScorerConfig& remote) {
  if (selector == "lexical") return std::make_unique<LexicalScorer>();
  if (selector == "remote") return std::make_unique<RemoteScorer>(remote);
  throw ConfigError("unknown scorer '" + std::string(selector) + "' (expected lexical or remote)");
}

}  // namespace uavsc

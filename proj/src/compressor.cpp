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

#include "uavsc/compressor.hpp"

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <regex>

#include "json.hpp"
#include "uavsc/errors.hpp"
#include "uavsc/text_util.hpp"

namespace uavsc {

namespace {

bool is_continuation(unsigned char c) { return (c & 0xC0) == 0x80; }

}  // namespace

Message IdentityEngine::compress(const Message& raw, std::string_view) { return raw; }

FixedRatioEngine::FixedRatioEngine(double ratio) : ratio_(ratio) {
  if (!(ratio > 0.0 && ratio <= 1.0)) {
    throw ConfigError("fixed-ratio engine needs 0 < ratio <= 1, got " + format_number(ratio));
  }
}

std::string FixedRatioEngine::name() const { return "fixed-ratio:" + format_number(ratio_); }

std::size_t FixedRatioEngine::target_length(double ratio, std::size_t len) {
  const double product = ratio * static_cast<double>(len);
  const double nearest = std::nearbyint(product);
  if (std::fabs(product - nearest) <= 1e-9 * std::max(1.0, product)) {
    return static_cast<std::size_t>(nearest);
  }
  return static_cast<std::size_t>(std::ceil(product));
}

Message FixedRatioEngine::compress(const Message& raw, std::string_view) {
  const std::string& text = raw.text();
  const std::size_t target = target_length(ratio_, text.size());
  std::size_t cut = std::min(target, text.size());
  // Back off while the cut would split a multi-byte sequence.
  while (cut > 0 && cut < text.size() && is_continuation(static_cast<unsigned char>(text[cut]))) {
    --cut;
  }
  std::string out = text.substr(0, cut);
  out.append(target - cut, '.');
  return Message(std::move(out));
}

TemplateEngine::TemplateEngine(WarningSink warn) : warn_(std::move(warn)) {
  if (!warn_) {
    warn_ = [](std::string_view msg) { std::cerr << "warning: " << msg << "\n"; };
  }
}

Message TemplateEngine::compress(const Message& raw, std::string_view) {
  static const std::regex target_re(R"(\[(\d+),(\d+)\]x\[(\d+),(\d+)\])");
  static const std::regex map_re(R"((\d+)x(\d+) grid map)");
  static const std::regex speed_re(R"(Velocity: (\d+(?:\.\d+)?) m/s)");
  static const std::regex relay_re(R"(UAV-(\d+) relay)");
  static const std::regex pos_re(R"(UAV-\d+ \((-?\d+(?:\.\d+)?),(-?\d+(?:\.\d+)?)\))");

  const std::string& text = raw.text();
  std::smatch m;
  if (!std::regex_search(text, m, target_re)) {
    warn_("template engine found no target rectangle; forwarding the raw task unchanged");
    return raw;
  }
  const std::string target = m[1].str() + "," + m[2].str() + "," + m[3].str() + "," + m[4].str();

  std::string out;
  if (std::regex_search(text, m, map_re)) out += "MAP=" + m[1].str() + "x" + m[2].str() + "|";
  out += "TGT=" + target;
  if (std::regex_search(text, m, speed_re)) out += "|SPD=" + m[1].str();

  std::string relays;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), relay_re);
       it != std::sregex_iterator(); ++it) {
    if (!relays.empty()) relays += ",";
    relays += (*it)[1].str();
  }
  if (!relays.empty()) out += "|RLY=" + relays;

  std::string positions;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), pos_re);
       it != std::sregex_iterator(); ++it) {
    if (!positions.empty()) positions += ";";
    positions += (*it)[1].str() + "," + (*it)[2].str();
  }
  if (!positions.empty()) out += "|POS=" + positions;
  out += "|ACT=GOTO";
  return Message(std::move(out));
}

void RemoteEngineConfig::validate() const {
  if (!(timeout_s > 0.0)) throw ConfigError("remote engine timeout must be > 0");
  if (max_retries < 0) throw ConfigError("remote engine retries must be >= 0");
  if (max_in_flight < 1) throw ConfigError("remote engine max in-flight must be >= 1");
  if (model.empty()) throw ConfigError("remote engine needs a model identifier");
  split_base_url(endpoint);
}

RemoteEngine::RemoteEngine(RemoteEngineConfig config)
    : config_((config.validate(), std::move(config))),
      client_(config_.endpoint, config_.timeout_s, config_.max_in_flight) {
  if (!config_.token_env.empty()) {
    if (const char* token = std::getenv(config_.token_env.c_str())) token_ = token;
  }
}

std::string RemoteEngine::request_body(const Message& raw, std::string_view context) const {
  nlohmann::ordered_json body;
  body["model"] = config_.model;
  body["temperature"] = config_.temperature;
  body["messages"] = nlohmann::ordered_json::array(
      {{{"role", "system"}, {"content", std::string(context)}},
       {{"role", "user"}, {"content", config_.directive + "\n\n" + raw.text()}}});
  return body.dump();
}

Message RemoteEngine::compress(const Message& raw, std::string_view context) {
  Headers headers;
  if (!token_.empty()) headers.emplace_back("Authorization", "Bearer " + token_);
  RetryPolicy policy;
  policy.max_retries = config_.max_retries;
  policy.initial_backoff_s = config_.initial_backoff_s;

  const HttpResponse r = client_.post_with_retries("/chat/completions", request_body(raw, context),
                                                   headers, policy);
  const std::string tries = " after " + std::to_string(r.attempts) + " attempt(s)";
  switch (r.outcome) {
    case HttpResponse::Outcome::kTimeout:
      throw EngineError(EngineError::Kind::kTimeout, "compression request timed out" + tries);
    case HttpResponse::Outcome::kConnectionFailed:
      throw EngineError(EngineError::Kind::kTransport,
                        "compression endpoint unreachable (" + r.error + ")" + tries);
    case HttpResponse::Outcome::kOk:
      break;
  }
  if (r.status != 200) {
    throw EngineError(EngineError::Kind::kHttpStatus,
                      "compression endpoint returned HTTP " + std::to_string(r.status) + tries);
  }
  std::string content;
  try {
    const auto json = nlohmann::json::parse(r.body);
    content = json.at("choices").at(0).at("message").at("content").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw EngineError(EngineError::Kind::kBadResponse,
                      std::string("malformed chat-completion response: ") + e.what());
  }
  if (trim(content).empty()) {
    throw EngineError(EngineError::Kind::kEmptyOutput, "model returned an empty compression");
  }
  return Message(std::move(content));
}

std::unique_ptr<CompressionEngine> make_engine(std::string_view selector,
                                               const RemoteEngineConfig& remote) {
  if (selector == "identity") return std::make_unique<IdentityEngine>();
  if (selector == "template") return std::make_unique<TemplateEngine>();
  if (selector == "remote") return std::make_unique<RemoteEngine>(remote);
  constexpr std::string_view kFixed = "fixed-ratio:";
  if (selector.substr(0, kFixed.size()) == kFixed) {
    return std::make_unique<FixedRatioEngine>(
        parse_double(selector.substr(kFixed.size()), "fixed-ratio"));
  }
  throw ConfigError("unknown engine '" + std::string(selector) +
                    "' (expected identity, template, fixed-ratio:<rho> or remote)");
}

}  // namespace uavsc

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

#include "uavsc/http_client.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "httplib.h"
#include "uavsc/errors.hpp"

namespace uavsc {

std::chrono::duration<double> RetryPolicy::delay_before_retry(int retry) const {
  const double d = initial_backoff_s * std::pow(multiplier, std::max(0, retry - 1));
  return std::chrono::duration<double>(std::min(d, max_backoff_s));
}

bool HttpResponse::transient() const {
  if (outcome != Outcome::kOk) return true;
  return status == 408 || status == 429 || status >= 500;
}

std::pair<std::string, std::string> split_base_url(const std::string& base_url) {
  const auto scheme_end = base_url.find("://");
  if (scheme_end == std::string::npos) {
    throw ConfigError("endpoint URL needs a scheme (http:// or https://): " + base_url);
  }
  const auto path_start = base_url.find('/', scheme_end + 3);
  if (path_start == std::string::npos) return {base_url, ""};
  std::string prefix = base_url.substr(path_start);
  while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();
  return {base_url.substr(0, path_start), prefix};
}

HttpJsonClient::HttpJsonClient(std::string base_url, double timeout_s, int max_in_flight)
    : base_url_(std::move(base_url)), timeout_s_(timeout_s) {
  if (!(timeout_s_ > 0.0)) throw ConfigError("request timeout must be > 0");
  if (max_in_flight < 1) throw ConfigError("max in-flight requests must be >= 1");
  std::tie(origin_, prefix_) = split_base_url(base_url_);
  in_flight_ = std::make_unique<std::counting_semaphore<>>(max_in_flight);
}

HttpJsonClient::~HttpJsonClient() = default;

template <typename Fn>
HttpResponse HttpJsonClient::send(Fn&& fn) {
  in_flight_->acquire();
  struct Release {
    std::counting_semaphore<>* s;
    ~Release() { s->release(); }
  } release{in_flight_.get()};

  httplib::Client client(origin_);
  const auto secs = static_cast<time_t>(timeout_s_);
  const auto usecs = static_cast<time_t>((timeout_s_ - static_cast<double>(secs)) * 1e6);
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);

  const auto start = std::chrono::steady_clock::now();
  httplib::Result result = fn(client);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  HttpResponse response;
  response.attempts = 1;
  if (!result) {
    const auto err = result.error();
    const bool timed_out = err == httplib::Error::ConnectionTimeout ||
                           (err == httplib::Error::Read && elapsed.count() >= 0.9 * timeout_s_);
    response.outcome =
        timed_out ? HttpResponse::Outcome::kTimeout : HttpResponse::Outcome::kConnectionFailed;
    response.error = httplib::to_string(err);
    return response;
  }
  response.status = result->status;
  response.body = result->body;
  return response;
}

HttpResponse HttpJsonClient::post(const std::string& path, const std::string& json_body,
                                  const Headers& headers) {
  httplib::Headers h;
  for (const auto& [k, v] : headers) h.emplace(k, v);
  const std::string full = prefix_ + path;
  return send([&](httplib::Client& c) { return c.Post(full, h, json_body, "application/json"); });
}

HttpResponse HttpJsonClient::get(const std::string& path) {
  const std::string full = prefix_ + path;
  return send([&](httplib::Client& c) { return c.Get(full); });
}

HttpResponse HttpJsonClient::post_with_retries(
    const std::string& path, const std::string& json_body, const Headers& headers,
    const RetryPolicy& policy, const std::function<void(std::chrono::duration<double>)>& sleep) {
  HttpResponse response;
  for (int attempt = 0;; ++attempt) {
    response = post(path, json_body, headers);
    response.attempts = attempt + 1;
    if (!response.transient() || attempt >= policy.max_retries) return response;
    const auto delay = policy.delay_before_retry(attempt + 1);
    if (sleep) {
      sleep(delay);
    } else {
      std::this_thread::sleep_for(delay);
    }
  }
}

}  // namespace uavsc

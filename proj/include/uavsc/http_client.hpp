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

#include <chrono>
#include <functional>
#include <memory>
#include <semaphore>
#include <string>
#include <utility>
#include <vector>

namespace uavsc {

/// Exponential backoff: the delay before retry k (1-based) is
/// min(initial * multiplier^(k-1), max).
struct RetryPolicy {
  int max_retries = 2;
  double initial_backoff_s = 0.5;
  double multiplier = 2.0;
  double max_backoff_s = 8.0;

  std::chrono::duration<double> delay_before_retry(int retry) const;
};

struct HttpResponse {
  enum class Outcome { kOk, kConnectionFailed, kTimeout };

  Outcome outcome = Outcome::kOk;
  int status = 0;
  std::string body;
  std::string error;
  int attempts = 0;

  /// Worth another attempt: transport trouble, 408, 429 or any 5xx.
  bool transient() const;
};

using Headers = std::vector<std::pair<std::string, std::string>>;

/// Minimal JSON-over-HTTP client on top of cpp-httplib. `base_url` may carry
/// a path prefix ("https://host/v1"); request paths are appended to it.
/// Concurrent calls are capped by `max_in_flight`.
class HttpJsonClient {
 public:
  HttpJsonClient(std::string base_url, double timeout_s, int max_in_flight = 4);
  ~HttpJsonClient();

  HttpJsonClient(const HttpJsonClient&) = delete;
  HttpJsonClient& operator=(const HttpJsonClient&) = delete;

  HttpResponse post(const std::string& path, const std::string& json_body,
                    const Headers& headers = {});
  HttpResponse get(const std::string& path);

  /// POST with retries on transient outcomes. `sleep` is injectable for tests.
  HttpResponse post_with_retries(
      const std::string& path, const std::string& json_body, const Headers& headers,
      const RetryPolicy& policy,
      const std::function<void(std::chrono::duration<double>)>& sleep = {});

  const std::string& base_url() const noexcept { return base_url_; }

 private:
  template <typename Fn>
  HttpResponse send(Fn&& fn);

  std::string base_url_;
  std::string origin_;
  std::string prefix_;
  double timeout_s_;
  std::unique_ptr<std::counting_semaphore<>> in_flight_;
};

/// Splits "scheme://host[:port][/prefix]" into origin and path prefix.
std::pair<std::string, std::string> split_base_url(const std::string& base_url);

}  // namespace uavsc

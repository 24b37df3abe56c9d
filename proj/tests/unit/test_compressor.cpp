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

#include <atomic>
#include <chrono>
#include <random>
#include <thread>

#include "../support/mock_server.hpp"
#include "doctest.h"
#include "json.hpp"
#include "uavsc/compressor.hpp"
#include "uavsc/errors.hpp"
#include "uavsc/prompting.hpp"

using namespace uavsc;
using uavsc::testing::MockServer;

namespace {

// Random UTF-8 text mixing 1- to 4-byte sequences.
std::string random_utf8(std::mt19937_64& rng, std::size_t chars) {
  static const char* pieces[] = {"a", "Z", " ", "7", "\xC3\xA9", "\xD0\x96", "\xE2\x82\xAC",
                                 "\xE4\xB8\xAD", "\xF0\x9F\x9A\x81"};
  std::uniform_int_distribution<std::size_t> pick(0, std::size(pieces) - 1);
  std::string s;
  for (std::size_t i = 0; i < chars; ++i) s += pieces[pick(rng)];
  return s;
}

std::string chat_reply(const std::string& content) {
  nlohmann::json j = {{"choices", {{{"message", {{"role", "assistant"}, {"content", content}}}}}}};
  return j.dump();
}

RemoteEngineConfig mock_config(const MockServer& server) {
  RemoteEngineConfig cfg;
  cfg.endpoint = server.url("/v1");
  cfg.timeout_s = 2.0;
  cfg.max_retries = 2;
  cfg.initial_backoff_s = 0.01;
  cfg.token_env = "UAVSC_TEST_TOKEN";
  return cfg;
}

}  // namespace

TEST_SUITE("compressor") {
  TEST_CASE("identity engine") {
    IdentityEngine e;
    CHECK(e.compress(Message("ABC"), "").text() == "ABC");
    CHECK(e.compress(Message(""), "").text().empty());
    CHECK(e.compress(Message(std::string(1000, 'x')), "").byte_len() == 1000);
  }

  TEST_CASE("fixed-ratio engine examples") {
    const std::string ascii(200, 'q');
    CHECK(FixedRatioEngine(1.0).compress(Message(ascii), "").text() == ascii);
    CHECK(FixedRatioEngine(0.5).compress(Message(ascii), "").byte_len() == 100);

    // 48 ASCII bytes then a 4-byte character spanning the cut at 50.
    const std::string raw = std::string(48, 'a') + "\xF0\x9F\x9A\x81" + std::string(48, 'b');
    REQUIRE(raw.size() == 100);
    const auto out = FixedRatioEngine(0.5).compress(Message(raw), "");
    CHECK(out.byte_len() == 50);
    CHECK(is_valid_utf8(out.text()));
    CHECK(out.text() == std::string(48, 'a') + "..");
  }

  TEST_CASE("fixed-ratio engine rejects ratios outside (0, 1]") {
    CHECK_THROWS_AS(FixedRatioEngine(0.0), ConfigError);
    CHECK_THROWS_AS(FixedRatioEngine(-0.5), ConfigError);
    CHECK_THROWS_AS(FixedRatioEngine(1.01), ConfigError);
    CHECK_THROWS_AS(make_engine("fixed-ratio:abc"), ConfigError);
  }

  TEST_CASE("fixed-ratio target length matches exact rational ceiling") {
    // rho = p / 100; ceil(p * len / 100) in integer arithmetic.
    for (std::size_t p = 1; p <= 100; ++p) {
      for (std::size_t len = 0; len < 700; ++len) {
        const double rho = static_cast<double>(p) / 100.0;
        CHECK(FixedRatioEngine::target_length(rho, len) == (p * len + 99) / 100);
      }
    }
  }

  TEST_CASE("fixed-ratio output length and validity over random UTF-8") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ratio(0.01, 1.0);
    for (int i = 0; i < 2000; ++i) {
      const Message raw(random_utf8(rng, i % 120));
      const double rho = ratio(rng);
      const auto out = FixedRatioEngine(rho).compress(raw, "");
      CHECK(out.byte_len() == FixedRatioEngine::target_length(rho, raw.byte_len()));
      CHECK(is_valid_utf8(out.text()));
      CHECK(raw.text().compare(0, out.text().find_last_not_of('.') + 1, out.text(), 0,
                               out.text().find_last_not_of('.') + 1) == 0);
    }
  }

  TEST_CASE("template engine on the extreme raw task") {
    const auto spec = preset("extreme");
    const auto raw = render_raw_task(spec, sample_positions(spec, {4}));
    TemplateEngine e([](std::string_view) { FAIL("unexpected warning"); });
    const auto out = e.compress(raw, "");
    CHECK(out.text().find("TGT=18,23,18,23") != std::string::npos);
    CHECK(out.text().find("MAP=25x25") != std::string::npos);
    CHECK(out.text().find("SPD=20") != std::string::npos);
    CHECK(out.text().find("RLY=2,3") != std::string::npos);
    CHECK(out.text().find("ACT=GOTO") != std::string::npos);
    CHECK(out == e.compress(raw, ""));
    for (auto name : kPresetNames) {
      const auto s = preset(name);
      const auto r = render_raw_task(s, sample_positions(s, {8}));
      CHECK(e.compress(r, "").byte_len() < r.byte_len());
    }
  }

  TEST_CASE("template engine falls back to identity with a warning") {
    std::vector<std::string> warnings;
    TemplateEngine e([&](std::string_view w) { warnings.emplace_back(w); });
    const Message raw("fly somewhere nice");
    CHECK(e.compress(raw, "") == raw);
    REQUIRE(warnings.size() == 1);
    CHECK(warnings[0].find("no target") != std::string::npos);
  }

  TEST_CASE("engine selector") {
    CHECK(make_engine("identity")->name() == "identity");
    CHECK(make_engine("template")->name() == "template");
    CHECK(make_engine("fixed-ratio:0.5")->name() == "fixed-ratio:0.5");
    CHECK_THROWS_AS(make_engine("gzip"), ConfigError);
  }

  TEST_CASE("remote engine request layout") {
    RemoteEngineConfig cfg;
    cfg.model = "test-model";
    RemoteEngine e(cfg);
    const auto body = nlohmann::json::parse(e.request_body(Message("RAW TASK"), "SYSTEM CTX"));
    CHECK(body["model"] == "test-model");
    REQUIRE(body["messages"].size() == 2);
    CHECK(body["messages"][0]["role"] == "system");
    CHECK(body["messages"][0]["content"] == "SYSTEM CTX");
    CHECK(body["messages"][1]["role"] == "user");
    const std::string user = body["messages"][1]["content"];
    CHECK(user.find(RemoteEngineConfig::kDefaultDirective) == 0);
    CHECK(user.find("RAW TASK") != std::string::npos);
  }

  TEST_CASE("remote engine returns the model text and sends the bearer token") {
    MockServer server;
    std::string auth;
    server.server().Post("/v1/chat/completions", [&](const httplib::Request& req, httplib::Response& res) {
      auth = req.get_header_value("Authorization");
      res.set_content(chat_reply("OK"), "application/json");
    });
    server.start();
    ::setenv("UAVSC_TEST_TOKEN", "sk-test", 1);
    RemoteEngine e(mock_config(server));
    CHECK(e.compress(Message("task"), "ctx").text() == "OK");
    CHECK(auth == "Bearer sk-test");
    ::unsetenv("UAVSC_TEST_TOKEN");
  }

  TEST_CASE("remote engine gives up after retries on HTTP 500") {
    MockServer server;
    std::atomic<int> calls{0};
    server.server().Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
      ++calls;
      res.status = 500;
    });
    server.start();
    RemoteEngine e(mock_config(server));
    try {
      e.compress(Message("task"), "ctx");
      FAIL("expected EngineError");
    } catch (const EngineError& err) {
      CHECK(err.kind() == EngineError::Kind::kHttpStatus);
    }
    CHECK(calls == 3);
  }

  TEST_CASE("remote engine recovers after a transient failure") {
    MockServer server;
    std::atomic<int> calls{0};
    server.server().Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
      if (++calls == 1) {
        res.status = 503;
        return;
      }
      res.set_content(chat_reply("TGT=18,23,18,23"), "application/json");
    });
    server.start();
    RemoteEngine e(mock_config(server));
    CHECK(e.compress(Message("task"), "ctx").text() == "TGT=18,23,18,23");
    CHECK(calls == 2);
  }

  TEST_CASE("remote engine does not retry client errors") {
    MockServer server;
    std::atomic<int> calls{0};
    server.server().Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
      ++calls;
      res.status = 401;
    });
    server.start();
    RemoteEngine e(mock_config(server));
    CHECK_THROWS_AS(e.compress(Message("task"), "ctx"), EngineError);
    CHECK(calls == 1);
  }

  TEST_CASE("remote engine times out") {
    MockServer server;
    server.server().Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
      std::this_thread::sleep_for(std::chrono::milliseconds(600));
      res.set_content(chat_reply("late"), "application/json");
    });
    server.start();
    auto cfg = mock_config(server);
    cfg.timeout_s = 0.2;
    cfg.max_retries = 0;
    RemoteEngine e(cfg);
    try {
      e.compress(Message("task"), "ctx");
      FAIL("expected EngineError");
    } catch (const EngineError& err) {
      CHECK(err.kind() == EngineError::Kind::kTimeout);
    }
  }

  TEST_CASE("remote engine rejects empty and malformed output") {
    MockServer server;
    std::string reply = chat_reply("   ");
    server.server().Post("/v1/chat/completions", [&](const httplib::Request&, httplib::Response& res) {
      res.set_content(reply, "application/json");
    });
    server.start();
    RemoteEngine e(mock_config(server));
    try {
      e.compress(Message("task"), "ctx");
      FAIL("expected EngineError");
    } catch (const EngineError& err) {
      CHECK(err.kind() == EngineError::Kind::kEmptyOutput);
    }
    reply = R"({"choices": []})";
    try {
      e.compress(Message("task"), "ctx");
      FAIL("expected EngineError");
    } catch (const EngineError& err) {
      CHECK(err.kind() == EngineError::Kind::kBadResponse);
    }
  }

  TEST_CASE("remote engine reports an unreachable endpoint") {
    int port = 0;
    {
      MockServer probe;
      probe.start();
      port = probe.port();
    }
    RemoteEngineConfig cfg;
    cfg.endpoint = "http://127.0.0.1:" + std::to_string(port) + "/v1";
    cfg.max_retries = 1;
    cfg.initial_backoff_s = 0.01;
    cfg.timeout_s = 1.0;
    RemoteEngine e(cfg);
    try {
      e.compress(Message("task"), "ctx");
      FAIL("expected EngineError");
    } catch (const EngineError& err) {
      CHECK(err.kind() == EngineError::Kind::kTransport);
    }
  }

  TEST_CASE("remote engine config validation") {
    RemoteEngineConfig cfg;
    cfg.timeout_s = 0;
    CHECK_THROWS_AS(RemoteEngine{cfg}, ConfigError);
    cfg = {};
    cfg.max_retries = -1;
    CHECK_THROWS_AS(RemoteEngine{cfg}, ConfigError);
    cfg = {};
    cfg.endpoint = "localhost:8000";
    CHECK_THROWS_AS(RemoteEngine{cfg}, ConfigError);
  }
}

TEST_SUITE("http") {
  TEST_CASE("backoff grows geometrically and is capped") {
    RetryPolicy p;
    p.initial_backoff_s = 0.5;
    p.multiplier = 2.0;
    p.max_backoff_s = 3.0;
    CHECK(p.delay_before_retry(1).count() == doctest::Approx(0.5));
    CHECK(p.delay_before_retry(2).count() == doctest::Approx(1.0));
    CHECK(p.delay_before_retry(3).count() == doctest::Approx(2.0));
    CHECK(p.delay_before_retry(4).count() == doctest::Approx(3.0));
  }

  TEST_CASE("retry loop sleeps between attempts only") {
    MockServer server;
    server.server().Post("/x", [](const httplib::Request&, httplib::Response& res) { res.status = 429; });
    server.start();
    HttpJsonClient client(server.url(), 2.0);
    RetryPolicy p;
    p.max_retries = 3;
    std::vector<double> sleeps;
    const auto r = client.post_with_retries("/x", "{}", {}, p,
                                            [&](std::chrono::duration<double> d) { sleeps.push_back(d.count()); });
    CHECK(r.status == 429);
    CHECK(r.attempts == 4);
    CHECK(sleeps == std::vector<double>{0.5, 1.0, 2.0});
  }

  TEST_CASE("base URL splitting") {
    CHECK(split_base_url("https://api.example.com/v1") ==
          std::pair<std::string, std::string>{"https://api.example.com", "/v1"});
    CHECK(split_base_url("http://127.0.0.1:8100") ==
          std::pair<std::string, std::string>{"http://127.0.0.1:8100", ""});
    CHECK(split_base_url("http://h:1/a/b/") == std::pair<std::string, std::string>{"http://h:1", "/a/b"});
    CHECK_THROWS_AS(split_base_url("no-scheme"), ConfigError);
  }

  TEST_CASE("in-flight cap serializes concurrent requests") {
    MockServer server;
    std::atomic<int> current{0}, peak{0};
    server.server().Post("/slow", [&](const httplib::Request&, httplib::Response& res) {
      const int now = ++current;
      int seen = peak.load();
      while (now > seen && !peak.compare_exchange_weak(seen, now)) {
      }
      std::this_thread::sleep_for(std::chrono::milliseconds(50));
      --current;
      res.set_content("{}", "application/json");
    });
    server.start();
    HttpJsonClient client(server.url(), 5.0, 1);
    std::vector<std::thread> threads;
    for (int i = 0; i < 4; ++i) threads.emplace_back([&] { client.post("/slow", "{}"); });
    for (auto& t : threads) t.join();
    CHECK(peak == 1);
  }
}

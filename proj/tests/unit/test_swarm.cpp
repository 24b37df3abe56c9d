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

#include <cmath>
#include <random>

#include "doctest.h"
#include "uavsc/movement.hpp"
#include "uavsc/swarm.hpp"

using namespace uavsc;

namespace {
const Rect kExtremeTarget{18, 23, 18, 23};
}

TEST_SUITE("swarm") {
  TEST_CASE("distance examples") {
    CHECK(distance({0, 0}, {0, 0}) == 0.0);
    CHECK(distance({0, 0}, {3, 4}) == 5.0);
    CHECK(distance({1, 2}, {4, 6}) == 5.0);
  }

  TEST_CASE("distance is a metric on random triples") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 25.0);
    for (int i = 0; i < 5000; ++i) {
      const Position a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
      CHECK(distance(a, b) >= 0.0);
      CHECK(distance(a, b) == distance(b, a));
      CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
    }
  }

  TEST_CASE("in_target is inclusive") {
    CHECK(in_target({18, 18}, kExtremeTarget));
    CHECK_FALSE(in_target({17.9, 20}, kExtremeTarget));
    CHECK(in_target({23, 23}, kExtremeTarget));
    CHECK_FALSE(in_target({23.01, 23}, kExtremeTarget));
  }

  TEST_CASE("in_target is monotone along the segment to the nearest corner") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 24.0);
    for (int i = 0; i < 2000; ++i) {
      const Position p{u(rng), u(rng)};
      const Position corner{p.x < 20.5 ? 18.0 : 23.0, p.y < 20.5 ? 18.0 : 23.0};
      bool seen_inside = false;
      for (int k = 0; k <= 20; ++k) {
        const double lambda = k / 20.0;
        const Position q{p.x + lambda * (corner.x - p.x), p.y + lambda * (corner.y - p.y)};
        const bool inside = in_target(q, kExtremeTarget);
        if (seen_inside) CHECK(inside);
        seen_inside = seen_inside || inside;
      }
      CHECK(in_target(corner, kExtremeTarget));
    }
  }

  TEST_CASE("utf8 validation") {
    CHECK(is_valid_utf8(""));
    CHECK(is_valid_utf8("plain ascii"));
    CHECK(is_valid_utf8("\xC3\xA9t\xC3\xA9 \xE2\x82\xAC \xF0\x9F\x9A\x81"));
    CHECK_FALSE(is_valid_utf8("\xC3"));            // truncated
    CHECK_FALSE(is_valid_utf8("\xC0\xAF"));        // overlong
    CHECK_FALSE(is_valid_utf8("\xED\xA0\x80"));    // surrogate
    CHECK_FALSE(is_valid_utf8("\x80"));            // stray continuation
  }

  TEST_CASE("message byte length counts bytes, not characters") {
    CHECK(Message("ABC").byte_len() == 3);
    CHECK(Message("\xE2\x82\xAC").byte_len() == 3);
    CHECK(Message("").byte_len() == 0);
  }
}

TEST_SUITE("movement") {
  TEST_CASE("step_toward examples") {
    CHECK(step_toward({20, 20}, kExtremeTarget) == Position{20, 20});
    CHECK(step_toward({10, 10}, kExtremeTarget) == Position{11, 10});
    CHECK(step_toward({18, 17.5}, kExtremeTarget) == Position{18, 18});
    CHECK(step_toward({20, 10}, kExtremeTarget) == Position{20, 11});
    CHECK(step_toward({24, 24}, kExtremeTarget) == Position{23, 24});
    CHECK(step_toward({0, 20}, kExtremeTarget) == Position{1, 20});
  }

  TEST_CASE("steps are bounded and strictly reduce the Manhattan residual") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.0, 24.0);
    for (int i = 0; i < 3000; ++i) {
      Position p{u(rng), u(rng)};
      int guard = 0;
      while (!in_target(p, kExtremeTarget) && guard++ < 100) {
        const Position q = step_toward(p, kExtremeTarget);
        CHECK(distance(p, q) <= 1.0 + 1e-12);
        const bool x_step = q.x == p.x + 1.0 || q.x == p.x - 1.0 ||
                            q.x == kExtremeTarget.x_min || q.x == kExtremeTarget.x_max;
        const bool y_step = q.y == p.y + 1.0 || q.y == p.y - 1.0 ||
                            q.y == kExtremeTarget.y_min || q.y == kExtremeTarget.y_max;
        CHECK(((q.y == p.y && x_step) || (q.x == p.x && y_step)));
        CHECK(manhattan_to_rect(q, kExtremeTarget) < manhattan_to_rect(p, kExtremeTarget));
        p = q;
      }
      CHECK(in_target(p, kExtremeTarget));
    }
  }

  TEST_CASE("fractional starts need ceil(|dx|) + ceil(|dy|) steps") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0.0, 24.0);
    for (int i = 0; i < 2000; ++i) {
      Position p{u(rng), u(rng)};
      const Position q = nearest_point(p, kExtremeTarget);
      const int expected =
          static_cast<int>(std::ceil(std::fabs(q.x - p.x)) + std::ceil(std::fabs(q.y - p.y)));
      int steps = 0;
      while (!in_target(p, kExtremeTarget)) {
        p = step_toward(p, kExtremeTarget);
        ++steps;
      }
      CHECK(steps == expected);
    }
  }
}

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

#include "uavsc/movement.hpp"

#include <algorithm>
#include <cmath>

namespace uavsc {

Position nearest_point(const Position& p, const Rect& rect) {
  return {std::clamp(p.x, static_cast<double>(rect.x_min), static_cast<double>(rect.x_max)),
          std::clamp(p.y, static_cast<double>(rect.y_min), static_cast<double>(rect.y_max))};
}

double manhattan_to_rect(const Position& p, const Rect& rect) {
  const Position q = nearest_point(p, rect);
  return std::fabs(q.x - p.x) + std::fabs(q.y - p.y);
}

Position step_toward(const Position& p, const Rect& rect) {
  if (in_target(p, rect)) return p;
  const Position q = nearest_point(p, rect);
  const double dx = q.x - p.x;
  const double dy = q.y - p.y;
  Position next = p;
  // A residual of at most one unit lands exactly on the rectangle edge.
  if (std::fabs(dx) >= std::fabs(dy)) {
    next.x = std::fabs(dx) <= 1.0 ? q.x : p.x + std::copysign(1.0, dx);
  } else {
    next.y = std::fabs(dy) <= 1.0 ? q.y : p.y + std::copysign(1.0, dy);
  }
  return next;
}

}  // namespace uavsc

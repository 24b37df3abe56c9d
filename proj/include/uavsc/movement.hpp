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

#include "uavsc/swarm.hpp"

namespace uavsc {

/// Nearest point of `rect` to `p` (component-wise clamp).
Position nearest_point(const Position& p, const Rect& rect);

/// Manhattan distance from `p` to the nearest point of `rect`.
double manhattan_to_rect(const Position& p, const Rect& rect);

/// One axis-aligned move of at most one grid unit toward the nearest point of
/// `rect`. The axis with the larger residual moves; ties go to x. Positions
/// already inside the rectangle are returned unchanged.
Position step_toward(const Position& p, const Rect& rect);

}  // namespace uavsc

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

#include <cstddef>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace uavsc {

enum class Role { kCommander, kRelay, kExecutor };

std::string_view role_name(Role role);

/// Position in grid units. Coordinates are real-valued even though placements
/// start on integer cells.
struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

/// Inclusive axis-aligned rectangle in grid units.
struct Rect {
  int x_min = 0;
  int x_max = 0;
  int y_min = 0;
  int y_max = 0;

  friend bool operator==(const Rect&, const Rect&) = default;
};

/// UAV ids are 1-based throughout, matching the UAV-1 ... UAV-N naming.
using UavId = int;

struct UavState {
  UavId id = 0;
  Role role = Role::kExecutor;
  Position pos;
  bool received = false;
  bool standby = false;
  std::set<UavId> sent_to;

  friend bool operator==(const UavState&, const UavState&) = default;
};

/// A text payload and its UTF-8 byte length.
class Message {
 public:
  Message() = default;
  explicit Message(std::string text) : text_(std::move(text)) {}

  const std::string& text() const noexcept { return text_; }
  std::size_t byte_len() const noexcept { return text_.size(); }

  friend bool operator==(const Message&, const Message&) = default;

 private:
  std::string text_;
};

struct TransmissionRecord {
  int tick = 0;
  UavId sender = 0;
  UavId receiver = 0;
  std::size_t bytes = 0;

  friend bool operator==(const TransmissionRecord&, const TransmissionRecord&) = default;
};

double distance(const Position& a, const Position& b);

bool in_target(const Position& p, const Rect& rect);

/// True when `text` is well-formed UTF-8 (no overlongs, no surrogates).
bool is_valid_utf8(std::string_view text);

}  // namespace uavsc

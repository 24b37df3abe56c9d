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

#include <string>
#include <string_view>
#include <vector>

namespace uavsc {

/// Integral values print without a fractional part ("20", not "20.0"); other
/// values use the shortest representation that round-trips.
std::string format_number(double value);

std::string_view trim(std::string_view s);

std::vector<std::string> split(std::string_view s, char sep);

/// Parses a whole string as a double / int, throwing ConfigError otherwise.
double parse_double(std::string_view s, std::string_view what);
long long parse_int(std::string_view s, std::string_view what);

}  // namespace uavsc

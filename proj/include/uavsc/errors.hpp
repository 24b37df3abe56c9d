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

#include <stdexcept>
#include <string>

namespace uavsc {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownScenarioError : public Error {
 public:
  explicit UnknownScenarioError(const std::string& name)
      : Error("unknown scenario: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

/// A numeric argument lies outside its documented range.
class RangeError : public Error {
 public:
  using Error::Error;
};

class InfeasiblePlacementError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration (engine parameters, config files, CLI values).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A metric is undefined for its inputs, or an aggregation got the wrong arity.
class MetricError : public Error {
 public:
  using Error::Error;
};

/// Failure of a compression engine. Aborts the trial that triggered it.
class EngineError : public Error {
 public:
  enum class Kind { kTransport, kTimeout, kHttpStatus, kBadResponse, kEmptyOutput };

  EngineError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Failure of a semantic scorer. The trial keeps its other metrics.
class ScorerError : public Error {
 public:
  enum class Kind { kTransport, kTimeout, kHttpStatus, kBadResponse, kOutOfRange };

  ScorerError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// An experiment stopped because at least one trial failed hard.
class ExperimentError : public Error {
 public:
  using Error::Error;
};

}  // namespace uavsc

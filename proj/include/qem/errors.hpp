// Copyright 2026 The qem authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qem {

/// Base error type. Every failure carries a stable machine-readable code
/// (stable across releases, suitable for scripting against the CLI) plus a
/// human-readable message.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string &what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string &code() const noexcept { return code_; }

  private:
    std::string code_;
};

struct ParseError : Error {
    explicit ParseError(const std::string &what) : Error("parse_error", what) {}
};

struct ValidationError : Error {
    explicit ValidationError(const std::string &what)
        : Error("validation_error", what) {}
};

struct SimulationError : Error {
    explicit SimulationError(const std::string &what)
        : Error("simulation_error", what) {}
};

struct MitigationError : Error {
    explicit MitigationError(const std::string &what)
        : Error("mitigation_error", what) {}
};

struct MetricsError : Error {
    explicit MetricsError(const std::string &what)
        : Error("metrics_error", what) {}
};

struct CutError : Error {
    explicit CutError(const std::string &what) : Error("cut_error", what) {}
};

struct ConfigError : Error {
    explicit ConfigError(const std::string &what)
        : Error("config_error", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string &what) : Error("io_error", what) {}
};

} // namespace qem

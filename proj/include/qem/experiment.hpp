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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qem/circuit.hpp"
#include "qem/device.hpp"

namespace qem {

enum class Method {
    noisy,
    rzne,
    rzne_topk,
    slzne,
    slzne_topk,
    pipeline,
    dzne,
    cutqc_unmitigated,
    cutqc_cm,
    cutqc_mc,
};

const char *method_name(Method m);
Method method_from_name(const std::string &name);

struct ExperimentConfig {
    std::string benchmark = "ghz";
    int qubits = 4;
    /// Family parameter (steps or layers); -1 takes the family default.
    int param = -1;
    NoiseConfig noise;
    std::vector<Method> methods = {Method::noisy, Method::rzne};
    /// Diagonal observable as an I/Z string, character i = qubit i. Empty
    /// means Z on every qubit.
    std::string observable;
    int top_k = 10;
    double esp_threshold = 0.10;
    double latency_fraction = 0.7;
    int max_cuts = 2;
    std::uint64_t seed = 1;
    /// Replace the noisy distribution (and each fragment variant) with a
    /// multinomial estimate from this many shots.
    bool sampled = false;
    std::uint64_t shots = 32768;
    bool placement = false;
};

/// ghz rows score distribution overlap, not observable error, so an
/// explicit observable there is rejected (ConfigError).
void validate_config(const ExperimentConfig &cfg);

ExperimentConfig config_from_json(const nlohmann::json &j);

struct StateWeight {
    std::uint64_t state = 0;
    std::string bits;
    double probability = 0.0;
};

struct MethodResult {
    Method method = Method::noisy;
    bool ok = true;
    std::string error_code;
    std::string error_message;
    double expectation = 0.0;
    std::optional<double> abe;
    std::optional<double> abr;
    std::optional<double> fidelity;
    /// Empty for expectation-only methods (dzne).
    std::vector<double> distribution;
    std::vector<StateWeight> top_states;
    /// Route taken (pipeline method only).
    std::string note;
};

struct ExperimentReport {
    ExperimentConfig config;
    double esp = 0.0;
    double reliability = 0.0;
    double latency_ns = 0.0;
    double ideal_expectation = 0.0;
    std::vector<double> ideal_distribution;
    std::vector<MethodResult> results;
};

/// Runs one benchmark under one noise configuration and scores every
/// requested method. A method that throws is recorded as a failed row with
/// its error code; the remaining methods still run.
ExperimentReport run_experiment(const ExperimentConfig &cfg,
                                const DeviceModel &d);

/// benchmark,qubits,esp,latency_ns,method,expectation,abe,abr,fidelity,seed
std::string csv_header();
/// One CSV line per method result, %.12g cells, blanks for absent metrics.
std::string csv_rows(const ExperimentReport &report);

nlohmann::json report_to_json(const ExperimentReport &report);

struct SweepResult {
    std::string csv;
    nlohmann::json json;
};

/// Sweep config: {"device": path, "rows": [{...}, ...]} plus optional
/// defaults merged under each row. The device path resolves relative to
/// base_dir. Rows run concurrently; outputs merge in row order, so repeated
/// runs with the same seed are byte-identical.
SweepResult run_sweep(const nlohmann::json &sweep, const std::string &base_dir);

SweepResult run_sweep_file(const std::string &config_path);

} // namespace qem

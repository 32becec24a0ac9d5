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

#include "qem/circuit.hpp"
#include "qem/device.hpp"

namespace qem {

/// Product over gates of (1 - min(1, gate_error * scale)). The gate factors
/// of estimated success probability.
double esp_unitary(const Circuit &c, const DeviceModel &d, double scale = 1.0);

/// Product over measured qubits of (1 - readout_error).
double esp_measure(const Circuit &c, const DeviceModel &d);

/// esp_unitary * esp_measure: the probability that no gate error and no
/// readout error fires on one execution.
double compute_esp(const Circuit &c, const DeviceModel &d, double scale = 1.0);

/// The reliability the configured noise channels actually realize: the gate
/// factor only when depolarizing noise is on, the measurement factor only
/// when readout confusion is on. Equals 1 when both are off.
double effective_reliability(const Circuit &c, const DeviceModel &d,
                             const NoiseConfig &nc);

} // namespace qem

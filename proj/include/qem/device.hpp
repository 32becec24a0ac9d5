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

#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qem/circuit.hpp"

namespace qem {

/// Calibration data for a device. All times are nanoseconds. gate_error maps
/// a gate name to either a single rate (vector of size 1) or a per-qubit
/// rate vector; two-qubit rates index by the first operand.
struct DeviceModel {
    std::map<std::string, std::vector<double>> gate_error;
    std::vector<double> readout_error;
    std::vector<double> t1;
    std::vector<double> t2;
    /// Keys: gate names, plus the class fallbacks "1q", "2q", and the
    /// required "measure". Name keys win over class keys.
    std::map<std::string, double> gate_duration;

    int num_qubits() const { return static_cast<int>(t1.size()); }

    double gate_error_for(const Gate &g) const;
    double readout_error_for(int qubit) const;
    double duration_for(const Gate &g) const;
    double measure_duration() const;

    /// Median over per-qubit T1 (mid-pair average for even counts).
    double median_t1() const;
    double min_t1(const std::set<int> &qubits) const;

    /// Restriction to the contiguous qubit window [offset, offset + width).
    DeviceModel window(int offset, int width) const;
};

/// Throws ValidationError unless: all arrays are consistently sized and
/// positive where required, rates lie in [0, 1], the "measure" duration is
/// present, and 0 < t2[q] <= 2 t1[q] for every qubit (the physical bound for
/// the relaxation model used here).
void validate_device(const DeviceModel &d);

DeviceModel device_from_json(const nlohmann::json &j);
nlohmann::json device_to_json(const DeviceModel &d);
DeviceModel load_device(const std::string &path);

/// Contiguous placement window of the given width minimizing the accumulated
/// readout-window decay burden sum_q d_meas / T1[q] + d_meas / T2[q].
/// Ties resolve to the smaller offset. Returns the offset.
int place(const DeviceModel &d, int width);

/// ASAP-scheduled circuit duration: each gate starts when all its operands
/// are free and occupies them for the device duration of that gate. Returns
/// the final qubit-clock maximum; the measurement window is not included.
double compute_latency(const Circuit &c, const DeviceModel &d);

/// Which noise channels the simulator applies. Readout confusion is modeled
/// but disabled by default; the bundled experiments run depolarizing and
/// thermal relaxation only.
struct NoiseConfig {
    bool depolarizing_enabled = true;
    bool thermal_enabled = true;
    bool readout_enabled = false;
    double depolarizing_scale = 1.0;
};

NoiseConfig noise_config_from_json(const nlohmann::json &j);
nlohmann::json noise_config_to_json(const NoiseConfig &nc);

} // namespace qem

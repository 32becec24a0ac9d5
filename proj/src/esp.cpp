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

#include "qem/esp.hpp"

#include <algorithm>

namespace qem {

double esp_unitary(const Circuit &c, const DeviceModel &d, double scale) {
    double esp = 1.0;
    for (const Gate &g : c.gates) {
        esp *= 1.0 - std::min(1.0, d.gate_error_for(g) * scale);
    }
    return esp;
}

double esp_measure(const Circuit &c, const DeviceModel &d) {
    double esp = 1.0;
    for (int q : c.measured) {
        esp *= 1.0 - d.readout_error_for(q);
    }
    return esp;
}

double compute_esp(const Circuit &c, const DeviceModel &d, double scale) {
    return esp_unitary(c, d, scale) * esp_measure(c, d);
}

double effective_reliability(const Circuit &c, const DeviceModel &d,
                             const NoiseConfig &nc) {
    double r = 1.0;
    if (nc.depolarizing_enabled) {
        r *= esp_unitary(c, d, nc.depolarizing_scale);
    }
    if (nc.readout_enabled) {
        r *= esp_measure(c, d);
    }
    return r;
}

} // namespace qem

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

#include <string>

#include "doctest.h"
#include "qem/benchmarks.hpp"
#include "qem/device.hpp"
#include "qem/esp.hpp"

namespace {

std::string data_path(const std::string &name) {
    return std::string(QEM_DATA_DIR) + "/" + name;
}

} // namespace

TEST_CASE("esp multiplies gate and readout success rates") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    qem::Circuit c;
    c.width = 2;
    c.gates = {{"cx", {0, 1}}, {"cx", {0, 1}}};
    c.measured = {0};

    CHECK(qem::esp_unitary(c, d) == doctest::Approx(0.99 * 0.99));
    CHECK(qem::esp_measure(c, d) == doctest::Approx(0.98));
    CHECK(qem::compute_esp(c, d) ==
          doctest::Approx(0.960498).epsilon(1e-12));
}

TEST_CASE("scaled error rates clamp at one") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    qem::Circuit c;
    c.width = 2;
    c.gates = {{"cx", {0, 1}}};
    c.measured = {0, 1};

    CHECK(qem::esp_unitary(c, d, 10.0) == doctest::Approx(0.9));
    // Beyond the clamp every gate fails with certainty.
    CHECK(qem::esp_unitary(c, d, 1000.0) == doctest::Approx(0.0));
    CHECK(qem::compute_esp(c, d, 1000.0) == doctest::Approx(0.0));
}

TEST_CASE("esp decreases with circuit size") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    double prev = 1.0;
    for (int n = 2; n <= 8; ++n) {
        const auto c = qem::generate_benchmark("ghz", n, -1);
        const double esp = qem::compute_esp(c, d);
        CHECK(esp < prev);
        CHECK(esp > 0.0);
        prev = esp;
    }
}

TEST_CASE("effective_reliability tracks the enabled channels") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    const auto c = qem::generate_benchmark("ghz", 3, -1);
    const double eu = qem::esp_unitary(c, d);
    const double em = qem::esp_measure(c, d);

    qem::NoiseConfig nc;
    nc.depolarizing_enabled = true;
    nc.readout_enabled = true;
    CHECK(qem::effective_reliability(c, d, nc) ==
          doctest::Approx(eu * em).epsilon(1e-14));

    nc.readout_enabled = false;
    CHECK(qem::effective_reliability(c, d, nc) ==
          doctest::Approx(eu).epsilon(1e-14));

    nc.depolarizing_enabled = false;
    nc.readout_enabled = true;
    CHECK(qem::effective_reliability(c, d, nc) ==
          doctest::Approx(em).epsilon(1e-14));

    nc.readout_enabled = false;
    CHECK(qem::effective_reliability(c, d, nc) == doctest::Approx(1.0));

    // The depolarizing scale flows through to the reliability estimate.
    nc.depolarizing_enabled = true;
    nc.depolarizing_scale = 5.0;
    CHECK(qem::effective_reliability(c, d, nc) ==
          doctest::Approx(qem::esp_unitary(c, d, 5.0)).epsilon(1e-14));
}

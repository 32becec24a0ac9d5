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

#include "qem/benchmarks.hpp"
#include "qem/errors.hpp"
#include "qem/rng.hpp"

namespace qem {

namespace {

constexpr double kHsFieldZ = 0.35;
constexpr double kHsCouplingZZ = 1.5708;
constexpr double kHsTransverseX = 1.5708;
constexpr double kQaoaGamma = 0.7;
constexpr double kQaoaBeta = 0.4;
constexpr std::uint64_t kVqeAngleSeed = 0x51CE5;
constexpr double kVqeAngleLo = 0.2;
constexpr double kVqeAngleHi = 1.2;

void measure_all(Circuit &c) {
    for (int q = 0; q < c.width; ++q)
        c.measured.insert(q);
}

Circuit make_ghz(int n) {
    if (n < 2)
        throw ValidationError("ghz requires at least 2 qubits");
    Circuit c;
    c.width = n;
    c.gates.push_back({"h", {0}, 0.0});
    for (int q = 0; q + 1 < n; ++q)
        c.gates.push_back({"cx", {q, q + 1}, 0.0});
    measure_all(c);
    return c;
}

Circuit make_hs(int n, int steps) {
    if (n < 2)
        throw ValidationError("hs requires at least 2 qubits");
    if (steps < 1)
        throw ValidationError("hs requires at least 1 step");
    Circuit c;
    c.width = n;
    for (int s = 0; s < steps; ++s) {
        for (int q = 0; q < n; ++q)
            c.gates.push_back({"rz", {q}, kHsFieldZ});
        for (int q = 0; q + 1 < n; ++q)
            c.gates.push_back({"rzz", {q, q + 1}, kHsCouplingZZ});
        for (int q = 0; q < n; ++q)
            c.gates.push_back({"rx", {q}, kHsTransverseX});
    }
    measure_all(c);
    return c;
}

Circuit make_qaoa(int n, bool complete) {
    if (n < 3)
        throw ValidationError("qaoa requires at least 3 qubits");
    Circuit c;
    c.width = n;
    for (int q = 0; q < n; ++q)
        c.gates.push_back({"h", {q}, 0.0});
    if (complete) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                c.gates.push_back({"rzz", {a, b}, kQaoaGamma});
    } else {
        for (int q = 0; q < n; ++q)
            c.gates.push_back({"rzz", {q, (q + 1) % n}, kQaoaGamma});
    }
    for (int q = 0; q < n; ++q)
        c.gates.push_back({"rx", {q}, kQaoaBeta});
    measure_all(c);
    return c;
}

Circuit make_vqe(int n, int layers) {
    if (n < 2)
        throw ValidationError("vqe requires at least 2 qubits");
    if (layers < 1)
        throw ValidationError("vqe requires at least 1 layer");
    Circuit c;
    c.width = n;
    SplitMix64 stream(kVqeAngleSeed);
    for (int l = 0; l < layers; ++l) {
        for (int q = 0; q < n; ++q) {
            const double u = stream.next_unit();
            c.gates.push_back(
                {"ry", {q}, kVqeAngleLo + (kVqeAngleHi - kVqeAngleLo) * u});
        }
        for (int q = 0; q + 1 < n; ++q)
            c.gates.push_back({"cx", {q, q + 1}, 0.0});
    }
    measure_all(c);
    return c;
}

} // namespace

Circuit generate_benchmark(const std::string &family, int qubits, int param) {
    if (family == "ghz")
        return make_ghz(qubits);
    if (family == "hs")
        return make_hs(qubits, param < 0 ? 2 : param);
    if (family == "qaoa")
        return make_qaoa(qubits, false);
    if (family == "qaoa_complete")
        return make_qaoa(qubits, true);
    if (family == "vqe")
        return make_vqe(qubits, param < 0 ? 1 : param);
    throw ValidationError("unknown benchmark family: " + family);
}

} // namespace qem

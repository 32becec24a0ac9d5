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
#include <set>
#include <string>
#include <vector>

namespace qem {

/// One gate application. Supported names: h, x, y, z, s, sdg, t, tdg, rx, ry,
/// rz (single qubit; the r-family carries an angle) and cx, cz, rzz (two
/// qubit). For cx, qubits[0] is the control. Measurements are not gates; a
/// circuit carries its measured-qubit set separately.
struct Gate {
    std::string name;
    std::vector<int> qubits;
    double angle = 0.0;

    bool operator==(const Gate &) const = default;
};

struct Circuit {
    int width = 0;
    std::vector<Gate> gates;
    std::set<int> measured;

    bool operator==(const Circuit &) const = default;
};

bool is_known_gate(const std::string &name);
bool is_two_qubit_gate(const std::string &name);
bool gate_has_angle(const std::string &name);

/// Throws ValidationError on out-of-range qubits, wrong arity, repeated
/// qubits within a gate, or unknown gate names.
void validate_circuit(const Circuit &c);

/// Exact inverse of a single gate (adjoint): self-inverse names map to
/// themselves, s <-> sdg, t <-> tdg, rotations negate their angle.
Gate inverse_gate(const Gate &g);

/// Global unitary folding U (U^dagger U)^folds. folds = 0 returns the circuit
/// unchanged; the folded circuit has (2 folds + 1) times the gate count and
/// the same measured set. Throws ValidationError for folds < 0.
Circuit fold_global(const Circuit &c, int folds);

/// Diagonal Pauli observable: tensor product of I and Z factors. Bit q of
/// zmask set means a Z factor on qubit q.
struct PauliString {
    int width = 0;
    std::uint64_t zmask = 0;

    bool operator==(const PauliString &) const = default;
};

/// Parse a label such as "ZZIZ". Character i is the factor on qubit i
/// (matching basis-index bit order). Only I and Z are accepted: the toolkit
/// measures in the computational basis, so only diagonal observables have a
/// distribution-level expectation. Throws ParseError otherwise.
PauliString parse_pauli(const std::string &label);

PauliString all_z(int width);

/// Expectation of the observable under a probability vector of size
/// 2^width: sum_s p[s] * (-1)^popcount(s & zmask).
double expectation(const std::vector<double> &probs, const PauliString &obs);

} // namespace qem

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

#include <algorithm>
#include <array>
#include <bit>

#include "qem/circuit.hpp"
#include "qem/errors.hpp"

namespace qem {

namespace {

constexpr std::array<const char *, 11> kOneQubit = {
    "h", "x", "y", "z", "s", "sdg", "t", "tdg", "rx", "ry", "rz"};
constexpr std::array<const char *, 3> kTwoQubit = {"cx", "cz", "rzz"};

bool in(const auto &names, const std::string &name) {
    return std::any_of(names.begin(), names.end(),
                       [&](const char *n) { return name == n; });
}

} // namespace

bool is_known_gate(const std::string &name) {
    return in(kOneQubit, name) || in(kTwoQubit, name);
}

bool is_two_qubit_gate(const std::string &name) { return in(kTwoQubit, name); }

bool gate_has_angle(const std::string &name) {
    return name == "rx" || name == "ry" || name == "rz" || name == "rzz";
}

void validate_circuit(const Circuit &c) {
    if (c.width < 1)
        throw ValidationError("circuit width must be at least 1");
    for (const Gate &g : c.gates) {
        if (!is_known_gate(g.name))
            throw ValidationError("unknown gate name: " + g.name);
        const std::size_t arity = is_two_qubit_gate(g.name) ? 2 : 1;
        if (g.qubits.size() != arity)
            throw ValidationError("gate " + g.name + " expects " +
                                  std::to_string(arity) + " qubit operand(s)");
        for (int q : g.qubits)
            if (q < 0 || q >= c.width)
                throw ValidationError("gate " + g.name +
                                      " addresses qubit out of range");
        if (arity == 2 && g.qubits[0] == g.qubits[1])
            throw ValidationError("gate " + g.name +
                                  " addresses the same qubit twice");
    }
    for (int q : c.measured)
        if (q < 0 || q >= c.width)
            throw ValidationError("measured qubit out of range");
}

Gate inverse_gate(const Gate &g) {
    Gate inv = g;
    if (g.name == "s")
        inv.name = "sdg";
    else if (g.name == "sdg")
        inv.name = "s";
    else if (g.name == "t")
        inv.name = "tdg";
    else if (g.name == "tdg")
        inv.name = "t";
    else if (gate_has_angle(g.name))
        inv.angle = -g.angle;
    // h, x, y, z, cx, cz are self-inverse.
    return inv;
}

Circuit fold_global(const Circuit &c, int folds) {
    if (folds < 0)
        throw ValidationError("fold count must be non-negative");
    Circuit out;
    out.width = c.width;
    out.measured = c.measured;
    out.gates.reserve(c.gates.size() * (2 * static_cast<std::size_t>(folds) + 1));
    out.gates = c.gates;
    for (int f = 0; f < folds; ++f) {
        for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it)
            out.gates.push_back(inverse_gate(*it));
        out.gates.insert(out.gates.end(), c.gates.begin(), c.gates.end());
    }
    return out;
}

PauliString parse_pauli(const std::string &label) {
    if (label.empty() || label.size() > 64)
        throw ParseError("observable label must have 1..64 factors");
    PauliString p;
    p.width = static_cast<int>(label.size());
    for (std::size_t i = 0; i < label.size(); ++i) {
        const char ch = label[i];
        if (ch == 'Z' || ch == 'z')
            p.zmask |= (std::uint64_t{1} << i);
        else if (ch != 'I' && ch != 'i')
            throw ParseError("observable factors must be I or Z, got '" +
                             std::string(1, ch) + "'");
    }
    return p;
}

PauliString all_z(int width) {
    if (width < 1 || width > 64)
        throw ValidationError("observable width must be 1..64");
    PauliString p;
    p.width = width;
    p.zmask = width == 64 ? ~std::uint64_t{0}
                          : (std::uint64_t{1} << width) - 1;
    return p;
}

double expectation(const std::vector<double> &probs, const PauliString &obs) {
    if (probs.size() != (std::size_t{1} << obs.width))
        throw ValidationError("observable width does not match distribution");
    double e = 0.0;
    for (std::size_t s = 0; s < probs.size(); ++s) {
        const int parity = std::popcount(s & obs.zmask) & 1;
        e += parity ? -probs[s] : probs[s];
    }
    return e;
}

} // namespace qem

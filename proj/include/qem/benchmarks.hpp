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

#include <string>

#include "qem/circuit.hpp"

namespace qem {

/// Deterministic benchmark circuit generators. All generated circuits measure
/// every qubit. The param argument selects the family's depth knob and may be
/// left at -1 for the family default:
///
///   ghz            H on qubit 0 plus a CNOT chain. param ignored.
///   hs             Trotterized transverse-field Ising evolution; per step
///                  RZ(0.35) on all qubits, RZZ(1.5708) on the nearest
///                  neighbor chain, RX(1.5708) on all qubits. param = steps,
///                  default 2.
///   qaoa           One layer on a ring: H on all, RZZ(0.7) on ring edges,
///                  RX(0.4) mixer. param ignored. Requires n >= 3 so the
///                  ring has distinct edges.
///   qaoa_complete  Same angles with RZZ on every qubit pair (all-to-all
///                  coupling). param ignored.
///   vqe            Hardware-efficient ansatz; per layer RY on all qubits
///                  followed by a linear CNOT entangler. Angles come from a
///                  fixed splitmix64 stream (seed 0x51CE5) mapped to
///                  [0.2, 1.2), drawn consecutively across layers. param =
///                  layers, default 1.
///
/// Throws ValidationError for an unknown family or unsupported size.
Circuit generate_benchmark(const std::string &family, int qubits,
                           int param = -1);

} // namespace qem

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
#include <vector>

#include <nlohmann/json.hpp>

#include "qem/circuit.hpp"
#include "qem/device.hpp"

namespace qem {

/// A wire cut: the qubit's wire is severed between gate `after_gate` (its
/// last upstream use) and that qubit's next gate.
struct CutPoint {
    int after_gate = 0;
    int qubit = 0;
    friend bool operator==(const CutPoint &, const CutPoint &) = default;
    friend auto operator<=>(const CutPoint &, const CutPoint &) = default;
};

/// A two-fragment partition of the gate list. Cut wires all run upstream
/// fragment A to downstream fragment B. Cut qubits appear in both qubit
/// lists: fragment A measures them, fragment B carries their continuation.
struct CutPlan {
    std::vector<CutPoint> cuts;
    /// Per gate: 0 = fragment A, 1 = fragment B.
    std::vector<int> gate_side;
    /// Original qubit indices touched by each fragment, ascending.
    std::vector<int> qubits_a;
    std::vector<int> qubits_b;
};

/// Exhaustive search over wire-edge subsets of size 0..max_cuts. A plan is
/// valid when removing the edges leaves exactly two gate components, every
/// removed wire runs A to B, and both fragments are strictly narrower than
/// the original circuit. Among valid plans the winner minimizes, in order:
/// cut count, fragment-width imbalance, then larger |A| and the
/// lexicographically smallest cut list. Throws CutError when no subset
/// within budget qualifies.
CutPlan find_cut(const Circuit &c, int max_cuts);

nlohmann::json cut_plan_to_json(const CutPlan &plan);
CutPlan cut_plan_from_json(const nlohmann::json &j);

/// The executable fragments of a plan. Upstream variants append a basis
/// rotation per cut (X, Y, or Z = none) to fragment A: 3^K circuits, cut 0
/// the most significant base-3 digit. Downstream variants prepend a state
/// preparation per cut (|0>, |1>, |+>, |+i>) to fragment B: 4^K circuits.
/// All variants measure every local qubit.
struct CutVariants {
    int original_width = 0;
    int num_cuts = 0;
    std::vector<int> qubits_a;
    std::vector<int> qubits_b;
    /// Fragment-local positions of the cut qubits, in cut order.
    std::vector<int> cut_measure_local;
    std::vector<int> cut_prep_local;
    std::vector<Circuit> upstream;
    std::vector<Circuit> downstream;
};

CutVariants build_subcircuits(const Circuit &c, const CutPlan &plan);

/// Classical reconstruction: sum over the 4^K Pauli assignments of the cut
/// wires of (upstream kept-bit tensor) x (downstream Pauli-weighted
/// mixture), divided by 2^K, clamped, renormalized. up_dists must hold the
/// 3^K upstream measurement distributions, down_dists the 4^K downstream
/// ones, in variant order.
std::vector<double> recombine(const CutVariants &variants,
                              const std::vector<std::vector<double>> &up_dists,
                              const std::vector<std::vector<double>> &down_dists);

/// Everything needed to reconstruct and mitigate one cut circuit.
struct CutExecution {
    CutPlan plan;
    CutVariants variants;
    std::vector<std::vector<double>> up_dists;
    std::vector<std::vector<double>> down_dists;
    /// Per-variant reliability realized by the configured noise channels.
    std::vector<double> up_esp;
    std::vector<double> down_esp;
    /// Device offsets used for the whole circuit and each fragment (zero
    /// unless placement is on).
    int window_full = 0;
    int window_a = 0;
    int window_b = 0;
    /// Longest variant schedule, ns.
    double latency_ns = 0.0;
};

/// Searches for a plan, simulates every fragment variant under the device
/// noise, and records per-variant reliabilities. With use_placement each
/// width is placed independently on its best device window.
CutExecution run_cut_variants(const Circuit &c, const DeviceModel &d,
                              const NoiseConfig &nc, int max_cuts,
                              bool use_placement = false);

/// Reconstruction only; no extrapolation.
std::vector<double> cutqc_unmitigated(const CutExecution &exec);

/// Mitigate-then-combine: each fragment distribution is extrapolated with
/// its own variant reliability before reconstruction.
std::vector<double> cutqc_mc(const CutExecution &exec, int top_k = 0);

/// Combine-then-mitigate: reconstruct first, then extrapolate once with the
/// geometric mean of the canonical fragment reliabilities (all-Z upstream,
/// all-|0> downstream).
std::vector<double> cutqc_cm(const CutExecution &exec, int top_k = 0);

} // namespace qem

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
#include <vector>

#include "qem/circuit.hpp"
#include "qem/device.hpp"
#include "qem/kernels.hpp"

namespace qem {

/// Dense density matrix, row-major 2^n x 2^n. Basis convention: qubit q is
/// bit q (the least significant bit is qubit 0) of both the row and the
/// column index. Starts in |0...0><0...0|.
class DensityMatrix {
  public:
    explicit DensityMatrix(int width);

    int width() const { return width_; }
    std::size_t dim() const { return std::size_t{1} << width_; }
    cplx *data() { return m_.data(); }
    const cplx *data() const { return m_.data(); }
    cplx &at(std::size_t row, std::size_t col) { return m_[row * dim() + col]; }
    const cplx &at(std::size_t row, std::size_t col) const {
        return m_[row * dim() + col];
    }

    /// rho <- U rho U^dagger for the named gate.
    void apply_unitary(const Gate &g);

    /// Raw forms: u is row-major over the local subspace. For two qubits the
    /// local index is 2 * bit(qubits[0]) + bit(qubits[1]).
    void apply_unitary1(const cplx u[4], int qubit);
    void apply_unitary2(const cplx u[16], int q_high, int q_low);

    /// Local depolarizing channel on one or two qubits:
    /// rho <- (1 - p) rho + p (I / 2^k tensor Tr_gate rho).
    void apply_depolarizing(double p, const std::vector<int> &qubits);

    /// Amplitude damping toward |0> with coherence decay: excited population
    /// transfers with weight 1 - exp(-dt / t1), coherences scale by
    /// exp(-dt / t2). dt <= 0 is a no-op.
    void apply_thermal_relaxation(int qubit, double t1, double t2, double dt);

    double trace() const;

    /// rho <- (rho + rho^dagger) / 2. The channels above preserve Hermiticity
    /// exactly in exact arithmetic; this clears the residual floating-point
    /// asymmetry.
    void hermitize();

    /// Real part of the diagonal (not clamped, not renormalized).
    std::vector<double> probabilities() const;

  private:
    int width_;
    std::vector<cplx> m_;
};

/// Row-major matrix for a named gate. k receives the qubit count (1 or 2);
/// buf must hold 16 entries. Returns buf.
const cplx *gate_matrix(const std::string &name, double angle, cplx buf[16],
                        int &k);

struct SimOptions {
    /// Widths above this raise SimulationError (dense evolution cost grows
    /// as 4^width).
    int max_width = 12;
    /// Circuit qubit q uses device qubit device_offset + q.
    int device_offset = 0;
};

struct SimResult {
    std::vector<double> probabilities;
    /// Wall-clock length of the schedule: final-gate barrier plus the
    /// measurement window.
    double latency_ns = 0.0;
};

/// Density-matrix evolution under the device noise model. Gates run ASAP;
/// when thermal relaxation is enabled each operand first catches up with its
/// idle gap, then the gate applies (with optional depolarizing noise), then
/// the operands relax for the gate window. All qubits are measured in one
/// final readout layer: idle decay up to the global barrier, then decay for
/// the measurement window. Readout confusion (independent symmetric bit
/// flips on measured qubits) applies to the output distribution only when
/// enabled.
SimResult simulate(const Circuit &c, const DeviceModel &d,
                   const NoiseConfig &nc, const SimOptions &opts = {});

/// Per-qubit symmetric readout confusion applied in place to a probability
/// vector. Qubit q of the distribution uses readout_error[device_offset + q].
void apply_readout_confusion(std::vector<double> &probs,
                             const std::set<int> &measured,
                             const DeviceModel &d, int device_offset = 0);

/// Multinomial counts drawn by inverse-CDF sampling with a fixed generator
/// (mt19937_64 with a 53-bit uniform mapping), bit-reproducible across
/// platforms for a given seed.
std::vector<std::uint64_t> sample_counts(const std::vector<double> &probs,
                                         std::uint64_t shots,
                                         std::uint64_t seed);

/// counts / shots as a probability vector.
std::vector<double> empirical_distribution(
    const std::vector<std::uint64_t> &counts);

} // namespace qem

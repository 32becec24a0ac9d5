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

#include "qem/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qem/errors.hpp"
#include "qem/rng.hpp"

namespace qem {

namespace {

// h with a zero bit spliced in at position `bit`; bits at and above shift up.
inline std::size_t insert_zero(std::size_t h, int bit) {
    const std::size_t low = (std::size_t{1} << bit) - 1;
    return ((h & ~low) << 1) | (h & low);
}

inline cplx conj4(const cplx &z) { return std::conj(z); }

} // namespace

DensityMatrix::DensityMatrix(int width) : width_(width) {
    if (width < 1 || width > 30) {
        throw SimulationError("density matrix width out of range: " +
                              std::to_string(width));
    }
    m_.assign(dim() * dim(), cplx{0.0, 0.0});
    m_[0] = cplx{1.0, 0.0};
}

void DensityMatrix::apply_unitary1(const cplx u[4], int q) {
    const std::size_t D = dim();
    const std::size_t s = std::size_t{1} << q;
    const KernelTable &k = kernels();

    // Left multiply: rows mix in pairs across full-width runs.
    for (std::size_t h = 0; h < D / 2; ++h) {
        const std::size_t r0 = insert_zero(h, q);
        k.cmat2(m_.data() + r0 * D, m_.data() + (r0 | s) * D, u, D);
    }

    // Right multiply by U^dagger: columns mix with the conjugated matrix,
    // contiguous runs of length s.
    cplx uc[4];
    for (int i = 0; i < 4; ++i) uc[i] = conj4(u[i]);
    for (std::size_t r = 0; r < D; ++r) {
        cplx *row = m_.data() + r * D;
        for (std::size_t blk = 0; blk < D; blk += 2 * s) {
            k.cmat2(row + blk, row + blk + s, uc, s);
        }
    }
}

void DensityMatrix::apply_unitary2(const cplx u[16], int q_high, int q_low) {
    const std::size_t D = dim();
    const std::size_t sa = std::size_t{1} << q_high;
    const std::size_t sb = std::size_t{1} << q_low;
    const int lo = std::min(q_high, q_low);
    const int hi = std::max(q_high, q_low);
    const std::size_t run = std::size_t{1} << lo;
    const KernelTable &k = kernels();

    // Local index l = 2 * bit(q_high) + bit(q_low); run l offsets by
    // (l >> 1) * sa + (l & 1) * sb from the base index with both bits clear.
    for (std::size_t h = 0; h < D / 4; ++h) {
        const std::size_t i0 = insert_zero(insert_zero(h, lo), hi);
        k.cmat4(m_.data() + i0 * D, m_.data() + (i0 | sb) * D,
                m_.data() + (i0 | sa) * D, m_.data() + (i0 | sa | sb) * D, u,
                D);
    }

    cplx uc[16];
    for (int i = 0; i < 16; ++i) uc[i] = conj4(u[i]);
    for (std::size_t r = 0; r < D; ++r) {
        cplx *row = m_.data() + r * D;
        for (std::size_t h = 0; h < D / 4; h += run) {
            const std::size_t c0 = insert_zero(insert_zero(h, lo), hi);
            k.cmat4(row + c0, row + c0 + sb, row + c0 + sa,
                    row + c0 + sa + sb, uc, run);
        }
    }
}

void DensityMatrix::apply_unitary(const Gate &g) {
    cplx buf[16];
    int k = 0;
    const cplx *u = gate_matrix(g.name, g.angle, buf, k);
    if (k == 1) {
        apply_unitary1(u, g.qubits[0]);
    } else {
        apply_unitary2(u, g.qubits[0], g.qubits[1]);
    }
}

void DensityMatrix::apply_depolarizing(double p, const std::vector<int> &qs) {
    if (p <= 0.0) return;
    const std::size_t D = dim();
    const KernelTable &k = kernels();
    if (qs.size() == 1) {
        const int q = qs[0];
        const std::size_t s = std::size_t{1} << q;
        for (std::size_t h = 0; h < D / 2; ++h) {
            const std::size_t r0 = insert_zero(h, q);
            cplx *row0 = m_.data() + r0 * D;
            cplx *row1 = m_.data() + (r0 | s) * D;
            for (std::size_t blk = 0; blk < D; blk += 2 * s) {
                k.cmix2(row0 + blk, row0 + blk + s, row1 + blk,
                        row1 + blk + s, p, s);
            }
        }
        return;
    }
    const std::size_t sa = std::size_t{1} << qs[0];
    const std::size_t sb = std::size_t{1} << qs[1];
    const int lo = std::min(qs[0], qs[1]);
    const int hi = std::max(qs[0], qs[1]);
    const std::size_t run = std::size_t{1} << lo;
    const std::size_t off[4] = {0, sb, sa, sa + sb};
    for (std::size_t h = 0; h < D / 4; ++h) {
        const std::size_t r0 = insert_zero(insert_zero(h, lo), hi);
        cplx *rows[4];
        for (int l = 0; l < 4; ++l) rows[l] = m_.data() + (r0 + off[l]) * D;
        for (std::size_t g = 0; g < D / 4; g += run) {
            const std::size_t c0 = insert_zero(insert_zero(g, lo), hi);
            cplx *blk[16];
            for (int lr = 0; lr < 4; ++lr) {
                for (int lc = 0; lc < 4; ++lc) {
                    blk[lr * 4 + lc] = rows[lr] + c0 + off[lc];
                }
            }
            k.cmix4(blk, p, run);
        }
    }
}

void DensityMatrix::apply_thermal_relaxation(int q, double t1, double t2,
                                             double dt) {
    if (dt <= 0.0) return;
    const double g = 1.0 - std::exp(-dt / t1);
    const double f = std::exp(-dt / t2);
    const std::size_t D = dim();
    const std::size_t s = std::size_t{1} << q;
    const KernelTable &k = kernels();
    for (std::size_t h = 0; h < D / 2; ++h) {
        const std::size_t r0 = insert_zero(h, q);
        cplx *row0 = m_.data() + r0 * D;
        cplx *row1 = m_.data() + (r0 | s) * D;
        for (std::size_t blk = 0; blk < D; blk += 2 * s) {
            k.relax(row0 + blk, row0 + blk + s, row1 + blk, row1 + blk + s, g,
                    f, s);
        }
    }
}

double DensityMatrix::trace() const {
    const std::size_t D = dim();
    double t = 0.0;
    for (std::size_t i = 0; i < D; ++i) t += m_[i * D + i].real();
    return t;
}

void DensityMatrix::hermitize() {
    const std::size_t D = dim();
    for (std::size_t r = 0; r < D; ++r) {
        m_[r * D + r] = cplx{m_[r * D + r].real(), 0.0};
        for (std::size_t c = r + 1; c < D; ++c) {
            const cplx avg = 0.5 * (m_[r * D + c] + std::conj(m_[c * D + r]));
            m_[r * D + c] = avg;
            m_[c * D + r] = std::conj(avg);
        }
    }
}

std::vector<double> DensityMatrix::probabilities() const {
    const std::size_t D = dim();
    std::vector<double> p(D);
    for (std::size_t i = 0; i < D; ++i) p[i] = m_[i * D + i].real();
    return p;
}

const cplx *gate_matrix(const std::string &name, double angle, cplx buf[16],
                        int &k) {
    const double isq = 1.0 / std::numbers::sqrt2;
    const cplx i1{0.0, 1.0};
    k = 1;
    if (name == "h") {
        buf[0] = isq;
        buf[1] = isq;
        buf[2] = isq;
        buf[3] = -isq;
    } else if (name == "x") {
        buf[0] = 0.0;
        buf[1] = 1.0;
        buf[2] = 1.0;
        buf[3] = 0.0;
    } else if (name == "y") {
        buf[0] = 0.0;
        buf[1] = -i1;
        buf[2] = i1;
        buf[3] = 0.0;
    } else if (name == "z") {
        buf[0] = 1.0;
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = -1.0;
    } else if (name == "s") {
        buf[0] = 1.0;
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = i1;
    } else if (name == "sdg") {
        buf[0] = 1.0;
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = -i1;
    } else if (name == "t") {
        buf[0] = 1.0;
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = std::exp(i1 * (std::numbers::pi / 4.0));
    } else if (name == "tdg") {
        buf[0] = 1.0;
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = std::exp(-i1 * (std::numbers::pi / 4.0));
    } else if (name == "rx") {
        const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
        buf[0] = c;
        buf[1] = -i1 * s;
        buf[2] = -i1 * s;
        buf[3] = c;
    } else if (name == "ry") {
        const double c = std::cos(angle / 2.0), s = std::sin(angle / 2.0);
        buf[0] = c;
        buf[1] = -s;
        buf[2] = s;
        buf[3] = c;
    } else if (name == "rz") {
        buf[0] = std::exp(-i1 * (angle / 2.0));
        buf[1] = 0.0;
        buf[2] = 0.0;
        buf[3] = std::exp(i1 * (angle / 2.0));
    } else if (name == "cx" || name == "cz" || name == "rzz") {
        k = 2;
        for (int j = 0; j < 16; ++j) buf[j] = 0.0;
        if (name == "cx") {
            // qubits[0] is the control and the high local bit.
            buf[0 * 4 + 0] = 1.0;
            buf[1 * 4 + 1] = 1.0;
            buf[2 * 4 + 3] = 1.0;
            buf[3 * 4 + 2] = 1.0;
        } else if (name == "cz") {
            buf[0 * 4 + 0] = 1.0;
            buf[1 * 4 + 1] = 1.0;
            buf[2 * 4 + 2] = 1.0;
            buf[3 * 4 + 3] = -1.0;
        } else {
            const cplx em = std::exp(-i1 * (angle / 2.0));
            const cplx ep = std::exp(i1 * (angle / 2.0));
            buf[0 * 4 + 0] = em;
            buf[1 * 4 + 1] = ep;
            buf[2 * 4 + 2] = ep;
            buf[3 * 4 + 3] = em;
        }
    } else {
        throw SimulationError("no matrix for gate: " + name);
    }
    return buf;
}

SimResult simulate(const Circuit &c, const DeviceModel &d,
                   const NoiseConfig &nc, const SimOptions &opts) {
    validate_circuit(c);
    if (c.width > opts.max_width) {
        throw SimulationError(
            "circuit width " + std::to_string(c.width) +
            " exceeds the dense simulation cap " +
            std::to_string(opts.max_width));
    }
    if (opts.device_offset < 0 ||
        opts.device_offset + c.width > d.num_qubits()) {
        throw SimulationError("device window [" +
                              std::to_string(opts.device_offset) + ", " +
                              std::to_string(opts.device_offset + c.width) +
                              ") exceeds " + std::to_string(d.num_qubits()) +
                              " qubits");
    }
    const int off = opts.device_offset;

    DensityMatrix rho(c.width);
    std::vector<double> clock(c.width, 0.0);

    for (const Gate &g : c.gates) {
        const double dur = d.duration_for(g);
        double start = 0.0;
        for (int q : g.qubits) start = std::max(start, clock[q]);
        if (nc.thermal_enabled) {
            for (int q : g.qubits) {
                rho.apply_thermal_relaxation(q, d.t1[off + q], d.t2[off + q],
                                             start - clock[q]);
            }
        }
        rho.apply_unitary(g);
        if (nc.depolarizing_enabled) {
            const double p = std::min(
                1.0, d.gate_error_for(g) * nc.depolarizing_scale);
            rho.apply_depolarizing(p, g.qubits);
        }
        if (nc.thermal_enabled) {
            for (int q : g.qubits) {
                rho.apply_thermal_relaxation(q, d.t1[off + q], d.t2[off + q],
                                             dur);
            }
        }
        for (int q : g.qubits) clock[q] = start + dur;
    }

    double bar = 0.0;
    for (double t : clock) bar = std::max(bar, t);
    const double md = d.measure_duration();
    if (nc.thermal_enabled) {
        for (int q = 0; q < c.width; ++q) {
            rho.apply_thermal_relaxation(q, d.t1[off + q], d.t2[off + q],
                                         (bar - clock[q]) + md);
        }
    }

    rho.hermitize();

    SimResult out;
    out.latency_ns = bar + md;
    out.probabilities = rho.probabilities();
    if (nc.readout_enabled) {
        apply_readout_confusion(out.probabilities, c.measured, d, off);
    }
    return out;
}

void apply_readout_confusion(std::vector<double> &probs,
                             const std::set<int> &measured,
                             const DeviceModel &d, int device_offset) {
    const std::size_t D = probs.size();
    for (int q : measured) {
        const double m = d.readout_error_for(device_offset + q);
        if (m <= 0.0) continue;
        const std::size_t s = std::size_t{1} << q;
        for (std::size_t h = 0; h < D / 2; ++h) {
            const std::size_t i0 = insert_zero(h, q);
            const double p0 = probs[i0];
            const double p1 = probs[i0 | s];
            probs[i0] = (1.0 - m) * p0 + m * p1;
            probs[i0 | s] = (1.0 - m) * p1 + m * p0;
        }
    }
}

std::vector<std::uint64_t> sample_counts(const std::vector<double> &probs,
                                         std::uint64_t shots,
                                         std::uint64_t seed) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
        acc += std::max(probs[i], 0.0);
        cdf[i] = acc;
    }
    if (acc <= 0.0) {
        throw SimulationError("cannot sample from an all-zero distribution");
    }
    std::vector<std::uint64_t> counts(probs.size(), 0);
    std::mt19937_64 rng(seed);
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform_unit(rng) * acc;
        const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        const std::size_t idx =
            std::min(static_cast<std::size_t>(it - cdf.begin()),
                     probs.size() - 1);
        ++counts[idx];
    }
    return counts;
}

std::vector<double> empirical_distribution(
    const std::vector<std::uint64_t> &counts) {
    std::uint64_t total = 0;
    for (auto c : counts) total += c;
    std::vector<double> p(counts.size(), 0.0);
    if (total == 0) return p;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        p[i] = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return p;
}

} // namespace qem

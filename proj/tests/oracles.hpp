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
//
// Brute-force reference implementations used only by tests. Everything here
// is built from full 2^n x 2^n matrices and naive loops so it shares no
// code path with the library's strided simulator.
#pragma once

#include <cstddef>
#include <vector>

#include "qem/circuit.hpp"
#include "qem/density.hpp"
#include "qem/rng.hpp"

namespace oracle {

using qem::cplx;

// Full-width matrix of a gate: entry (i, j) is nonzero only when i and j
// agree outside the gate's qubits, and then equals the local matrix entry.
// Qubit q is bit q of the index.
inline std::vector<cplx> full_unitary(const qem::Gate &g, int n) {
    cplx buf[16];
    int k = 0;
    const cplx *u = qem::gate_matrix(g.name, g.angle, buf, k);
    const std::size_t dim = std::size_t{1} << n;
    std::size_t mask = 0;
    for (int q : g.qubits) mask |= std::size_t{1} << q;
    auto local = [&](std::size_t s) {
        if (k == 1) return static_cast<int>((s >> g.qubits[0]) & 1);
        return static_cast<int>(2 * ((s >> g.qubits[0]) & 1) +
                                ((s >> g.qubits[1]) & 1));
    };
    const int ld = 1 << k;
    std::vector<cplx> m(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~mask) != (j & ~mask)) continue;
            m[i * dim + j] = u[local(i) * ld + local(j)];
        }
    }
    return m;
}

// Noiseless output distribution by dense matrix-vector products.
inline std::vector<double> statevector_distribution(const qem::Circuit &c) {
    const std::size_t dim = std::size_t{1} << c.width;
    std::vector<cplx> psi(dim, cplx{0.0, 0.0});
    psi[0] = 1.0;
    for (const qem::Gate &g : c.gates) {
        const std::vector<cplx> m = full_unitary(g, c.width);
        std::vector<cplx> next(dim, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                next[i] += m[i * dim + j] * psi[j];
            }
        }
        psi = std::move(next);
    }
    std::vector<double> p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = std::norm(psi[i]);
    return p;
}

// Dense rho -> U rho U^dagger.
inline std::vector<cplx> conjugate_dense(const std::vector<cplx> &rho,
                                         const std::vector<cplx> &u,
                                         std::size_t dim) {
    std::vector<cplx> t(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t kk = 0; kk < dim; ++kk) {
            if (u[i * dim + kk] == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < dim; ++j) {
                t[i * dim + j] += u[i * dim + kk] * rho[kk * dim + j];
            }
        }
    }
    std::vector<cplx> out(dim * dim, cplx{0.0, 0.0});
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            for (std::size_t kk = 0; kk < dim; ++kk) {
                out[i * dim + j] +=
                    t[i * dim + kk] * std::conj(u[j * dim + kk]);
            }
        }
    }
    return out;
}

// Deterministic distribution: 2^n positive entries normalized to sum 1.
inline std::vector<double> random_distribution(qem::SplitMix64 &rng, int n) {
    std::vector<double> p(std::size_t{1} << n);
    double sum = 0.0;
    for (double &x : p) {
        x = 1e-3 + rng.next_unit();
        sum += x;
    }
    for (double &x : p) x /= sum;
    return p;
}

inline double tv_distance(const std::vector<double> &a,
                          const std::vector<double> &b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        s += a[i] > b[i] ? a[i] - b[i] : b[i] - a[i];
    }
    return 0.5 * s;
}

} // namespace oracle

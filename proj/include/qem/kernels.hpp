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

#include <complex>
#include <cstddef>

namespace qem {

using cplx = std::complex<double>;

/// Dense inner loops of the density-matrix simulator and the distribution
/// post-processing, factored behind a function-pointer table so a runtime
/// dispatcher can select between the portable scalar reference kernels and
/// the AVX2 variants. All kernels operate in place on equal-length runs.
struct KernelTable {
    /// Two-run complex 2x2 combine: (a, b) <- (u0 a + u1 b, u2 a + u3 b),
    /// elementwise over len entries.
    void (*cmat2)(cplx *a, cplx *b, const cplx u[4], std::size_t len);

    /// Four-run complex 4x4 combine, row-major u, elementwise.
    void (*cmat4)(cplx *r0, cplx *r1, cplx *r2, cplx *r3, const cplx u[16],
                  std::size_t len);

    /// Single-qubit depolarizing block mix on the quad (a, b, c, d) laid out
    /// as [row0col0, row0col1, row1col0, row1col1]:
    ///   a <- (1-p) a + (p/2)(a + d)   d <- (1-p) d + (p/2)(a + d)
    ///   b <- (1-p) b                  c <- (1-p) c
    void (*cmix2)(cplx *a, cplx *b, cplx *c, cplx *d, double p,
                  std::size_t len);

    /// Two-qubit depolarizing block mix over a 4x4 grid of runs, blk[r*4+c].
    /// Diagonal runs pull toward their elementwise average, off-diagonal runs
    /// scale by (1-p).
    void (*cmix4)(cplx *const blk[16], double p, std::size_t len);

    /// Thermal relaxation slice on the quad (a, b, c, d) as in cmix2:
    ///   a <- a + g d   d <- (1-g) d   b <- f b   c <- f c
    /// g is the excited-state decay weight, f the coherence damping factor.
    void (*relax)(cplx *a, cplx *b, cplx *c, cplx *d, double g, double f,
                  std::size_t len);

    double (*rsum)(const double *x, std::size_t len);
    void (*raxpy)(double a, const double *x, double *y, std::size_t len);
    void (*rscale)(double *x, double a, std::size_t len);
    void (*rclamp0)(double *x, std::size_t len);

    /// sum_i sqrt(max(p_i, 0) * max(q_i, 0))
    double (*rhell)(const double *p, const double *q, std::size_t len);
};

/// Table selected at first use: AVX2 when the CPU supports it, otherwise the
/// scalar reference. Environment override QEM_KERNELS=scalar|avx2 (an avx2
/// request on an unsupported CPU falls back to scalar).
const KernelTable &kernels();

/// Reference implementations; always available.
const KernelTable &scalar_kernels();

/// AVX2 implementations; call only when avx2_available().
const KernelTable &avx2_kernels();

bool avx2_available();

/// Name of the table kernels() resolved to: "scalar" or "avx2".
const char *kernel_backend();

} // namespace qem

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

#include <cmath>

#include "qem/kernels.hpp"

namespace qem {
namespace {

void s_cmat2(cplx *a, cplx *b, const cplx u[4], std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        const cplx x = a[i];
        const cplx y = b[i];
        a[i] = u[0] * x + u[1] * y;
        b[i] = u[2] * x + u[3] * y;
    }
}

void s_cmat4(cplx *r0, cplx *r1, cplx *r2, cplx *r3, const cplx u[16],
             std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        const cplx x0 = r0[i];
        const cplx x1 = r1[i];
        const cplx x2 = r2[i];
        const cplx x3 = r3[i];
        r0[i] = u[0] * x0 + u[1] * x1 + u[2] * x2 + u[3] * x3;
        r1[i] = u[4] * x0 + u[5] * x1 + u[6] * x2 + u[7] * x3;
        r2[i] = u[8] * x0 + u[9] * x1 + u[10] * x2 + u[11] * x3;
        r3[i] = u[12] * x0 + u[13] * x1 + u[14] * x2 + u[15] * x3;
    }
}

void s_cmix2(cplx *a, cplx *b, cplx *c, cplx *d, double p, std::size_t len) {
    const double keep = 1.0 - p;
    const double half = 0.5 * p;
    for (std::size_t i = 0; i < len; ++i) {
        const cplx t = half * (a[i] + d[i]);
        a[i] = keep * a[i] + t;
        d[i] = keep * d[i] + t;
        b[i] *= keep;
        c[i] *= keep;
    }
}

void s_cmix4(cplx *const blk[16], double p, std::size_t len) {
    const double keep = 1.0 - p;
    const double quarter = 0.25 * p;
    for (std::size_t i = 0; i < len; ++i) {
        const cplx t =
            quarter * (blk[0][i] + blk[5][i] + blk[10][i] + blk[15][i]);
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                cplx &x = blk[r * 4 + c][i];
                x = (r == c) ? keep * x + t : keep * x;
            }
        }
    }
}

void s_relax(cplx *a, cplx *b, cplx *c, cplx *d, double g, double f,
             std::size_t len) {
    const double keep = 1.0 - g;
    for (std::size_t i = 0; i < len; ++i) {
        a[i] += g * d[i];
        d[i] *= keep;
        b[i] *= f;
        c[i] *= f;
    }
}

double s_rsum(const double *x, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i)
        acc += x[i];
    return acc;
}

void s_raxpy(double a, const double *x, double *y, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        y[i] += a * x[i];
}

void s_rscale(double *x, double a, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        x[i] *= a;
}

void s_rclamp0(double *x, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
        x[i] = x[i] < 0.0 ? 0.0 : x[i];
}

double s_rhell(const double *p, const double *q, std::size_t len) {
    double acc = 0.0;
    for (std::size_t i = 0; i < len; ++i) {
        const double a = p[i] < 0.0 ? 0.0 : p[i];
        const double b = q[i] < 0.0 ? 0.0 : q[i];
        acc += std::sqrt(a * b);
    }
    return acc;
}

} // namespace

const KernelTable &scalar_kernels() {
    static const KernelTable table = {
        s_cmat2, s_cmat4,  s_cmix2,   s_cmix4, s_relax,
        s_rsum,  s_raxpy,  s_rscale,  s_rclamp0, s_rhell,
    };
    return table;
}

} // namespace qem

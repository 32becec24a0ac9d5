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

// AVX2 + FMA variants of the dense kernels. This translation unit is compiled
// with -mavx2 -mfma; callers must route through the dispatcher, which only
// hands out this table when the CPU reports AVX2.

#include "qem/kernels.hpp"

#if defined(__AVX2__)

#include <cmath>
#include <immintrin.h>

namespace qem {
namespace {

// One ymm register holds two complex doubles as [re0, im0, re1, im1].
// (ur + i ui)(xr + i xi): even lanes ur*xr - ui*xi, odd lanes ur*xi + ui*xr,
// which is exactly fmaddsub over the lane-swapped operand.
inline __m256d cmul(double ur, double ui, __m256d x) {
    const __m256d swapped = _mm256_permute_pd(x, 0x5);
    return _mm256_fmaddsub_pd(_mm256_set1_pd(ur), x,
                              _mm256_mul_pd(_mm256_set1_pd(ui), swapped));
}

void v_cmat2(cplx *a, cplx *b, const cplx u[4], std::size_t len) {
    const double u0r = u[0].real(), u0i = u[0].imag();
    const double u1r = u[1].real(), u1i = u[1].imag();
    const double u2r = u[2].real(), u2i = u[2].imag();
    const double u3r = u[3].real(), u3i = u[3].imag();
    double *pa = reinterpret_cast<double *>(a);
    double *pb = reinterpret_cast<double *>(b);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d x = _mm256_loadu_pd(pa + 2 * i);
        const __m256d y = _mm256_loadu_pd(pb + 2 * i);
        const __m256d na = _mm256_add_pd(cmul(u0r, u0i, x), cmul(u1r, u1i, y));
        const __m256d nb = _mm256_add_pd(cmul(u2r, u2i, x), cmul(u3r, u3i, y));
        _mm256_storeu_pd(pa + 2 * i, na);
        _mm256_storeu_pd(pb + 2 * i, nb);
    }
    for (; i < len; ++i) {
        const cplx x = a[i];
        const cplx y = b[i];
        a[i] = u[0] * x + u[1] * y;
        b[i] = u[2] * x + u[3] * y;
    }
}

void v_cmat4(cplx *r0, cplx *r1, cplx *r2, cplx *r3, const cplx u[16],
             std::size_t len) {
    cplx *rows[4] = {r0, r1, r2, r3};
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        __m256d x[4];
        for (int k = 0; k < 4; ++k)
            x[k] = _mm256_loadu_pd(reinterpret_cast<double *>(rows[k] + i));
        for (int r = 0; r < 4; ++r) {
            __m256d acc = cmul(u[4 * r].real(), u[4 * r].imag(), x[0]);
            for (int c = 1; c < 4; ++c)
                acc = _mm256_add_pd(
                    acc, cmul(u[4 * r + c].real(), u[4 * r + c].imag(), x[c]));
            _mm256_storeu_pd(reinterpret_cast<double *>(rows[r] + i), acc);
        }
    }
    for (; i < len; ++i) {
        const cplx x0 = r0[i], x1 = r1[i], x2 = r2[i], x3 = r3[i];
        r0[i] = u[0] * x0 + u[1] * x1 + u[2] * x2 + u[3] * x3;
        r1[i] = u[4] * x0 + u[5] * x1 + u[6] * x2 + u[7] * x3;
        r2[i] = u[8] * x0 + u[9] * x1 + u[10] * x2 + u[11] * x3;
        r3[i] = u[12] * x0 + u[13] * x1 + u[14] * x2 + u[15] * x3;
    }
}

void v_cmix2(cplx *a, cplx *b, cplx *c, cplx *d, double p, std::size_t len) {
    const __m256d keep = _mm256_set1_pd(1.0 - p);
    const __m256d half = _mm256_set1_pd(0.5 * p);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        double *pa = reinterpret_cast<double *>(a + i);
        double *pb = reinterpret_cast<double *>(b + i);
        double *pc = reinterpret_cast<double *>(c + i);
        double *pd = reinterpret_cast<double *>(d + i);
        const __m256d xa = _mm256_loadu_pd(pa);
        const __m256d xd = _mm256_loadu_pd(pd);
        const __m256d t = _mm256_mul_pd(half, _mm256_add_pd(xa, xd));
        _mm256_storeu_pd(pa, _mm256_fmadd_pd(keep, xa, t));
        _mm256_storeu_pd(pd, _mm256_fmadd_pd(keep, xd, t));
        _mm256_storeu_pd(pb, _mm256_mul_pd(keep, _mm256_loadu_pd(pb)));
        _mm256_storeu_pd(pc, _mm256_mul_pd(keep, _mm256_loadu_pd(pc)));
    }
    const double ks = 1.0 - p;
    const double hs = 0.5 * p;
    for (; i < len; ++i) {
        const cplx t = hs * (a[i] + d[i]);
        a[i] = ks * a[i] + t;
        d[i] = ks * d[i] + t;
        b[i] *= ks;
        c[i] *= ks;
    }
}

void v_cmix4(cplx *const blk[16], double p, std::size_t len) {
    const __m256d keep = _mm256_set1_pd(1.0 - p);
    const __m256d quarter = _mm256_set1_pd(0.25 * p);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        const __m256d d0 =
            _mm256_loadu_pd(reinterpret_cast<double *>(blk[0] + i));
        const __m256d d1 =
            _mm256_loadu_pd(reinterpret_cast<double *>(blk[5] + i));
        const __m256d d2 =
            _mm256_loadu_pd(reinterpret_cast<double *>(blk[10] + i));
        const __m256d d3 =
            _mm256_loadu_pd(reinterpret_cast<double *>(blk[15] + i));
        const __m256d t = _mm256_mul_pd(
            quarter,
            _mm256_add_pd(_mm256_add_pd(d0, d1), _mm256_add_pd(d2, d3)));
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                double *px = reinterpret_cast<double *>(blk[r * 4 + c] + i);
                __m256d x = _mm256_loadu_pd(px);
                x = _mm256_mul_pd(keep, x);
                if (r == c)
                    x = _mm256_add_pd(x, t);
                _mm256_storeu_pd(px, x);
            }
        }
    }
    const double ks = 1.0 - p;
    const double qs = 0.25 * p;
    for (; i < len; ++i) {
        const cplx t = qs * (blk[0][i] + blk[5][i] + blk[10][i] + blk[15][i]);
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c) {
                cplx &x = blk[r * 4 + c][i];
                x = (r == c) ? ks * x + t : ks * x;
            }
    }
}

void v_relax(cplx *a, cplx *b, cplx *c, cplx *d, double g, double f,
             std::size_t len) {
    const __m256d vg = _mm256_set1_pd(g);
    const __m256d vkeep = _mm256_set1_pd(1.0 - g);
    const __m256d vf = _mm256_set1_pd(f);
    std::size_t i = 0;
    for (; i + 2 <= len; i += 2) {
        double *pa = reinterpret_cast<double *>(a + i);
        double *pb = reinterpret_cast<double *>(b + i);
        double *pc = reinterpret_cast<double *>(c + i);
        double *pd = reinterpret_cast<double *>(d + i);
        const __m256d xd = _mm256_loadu_pd(pd);
        _mm256_storeu_pd(pa, _mm256_fmadd_pd(vg, xd, _mm256_loadu_pd(pa)));
        _mm256_storeu_pd(pd, _mm256_mul_pd(vkeep, xd));
        _mm256_storeu_pd(pb, _mm256_mul_pd(vf, _mm256_loadu_pd(pb)));
        _mm256_storeu_pd(pc, _mm256_mul_pd(vf, _mm256_loadu_pd(pc)));
    }
    const double kg = 1.0 - g;
    for (; i < len; ++i) {
        a[i] += g * d[i];
        d[i] *= kg;
        b[i] *= f;
        c[i] *= f;
    }
}

double v_rsum(const double *x, std::size_t len) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(x + i));
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < len; ++i)
        s += x[i];
    return s;
}

void v_raxpy(double a, const double *x, double *y, std::size_t len) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        _mm256_storeu_pd(
            y + i, _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i),
                                   _mm256_loadu_pd(y + i)));
    for (; i < len; ++i)
        y[i] += a * x[i];
}

void v_rscale(double *x, double a, std::size_t len) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    for (; i < len; ++i)
        x[i] *= a;
}

void v_rclamp0(double *x, std::size_t len) {
    const __m256d zero = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4)
        _mm256_storeu_pd(x + i, _mm256_max_pd(zero, _mm256_loadu_pd(x + i)));
    for (; i < len; ++i)
        x[i] = x[i] < 0.0 ? 0.0 : x[i];
}

double v_rhell(const double *p, const double *q, std::size_t len) {
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        const __m256d a = _mm256_max_pd(zero, _mm256_loadu_pd(p + i));
        const __m256d b = _mm256_max_pd(zero, _mm256_loadu_pd(q + i));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(_mm256_mul_pd(a, b)));
    }
    double lanes[4];
    _mm256_storeu_pd(lanes, acc);
    double s = lanes[0] + lanes[1] + lanes[2] + lanes[3];
    for (; i < len; ++i) {
        const double a = p[i] < 0.0 ? 0.0 : p[i];
        const double b = q[i] < 0.0 ? 0.0 : q[i];
        s += std::sqrt(a * b);
    }
    return s;
}

} // namespace

const KernelTable &avx2_kernels() {
    static const KernelTable table = {
        v_cmat2, v_cmat4, v_cmix2,  v_cmix4,   v_relax,
        v_rsum,  v_raxpy, v_rscale, v_rclamp0, v_rhell,
    };
    return table;
}

} // namespace qem

#else // !defined(__AVX2__)

namespace qem {

// Built without AVX2 support; the dispatcher never selects this table because
// avx2_available() is false, but the symbol must exist.
const KernelTable &avx2_kernels() { return scalar_kernels(); }

} // namespace qem

#endif

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
#include <cstring>
#include <string>
#include <vector>

#include "doctest.h"
#include "qem/kernels.hpp"
#include "qem/rng.hpp"

namespace {

using qem::cplx;

std::vector<cplx> random_cvec(qem::SplitMix64 &rng, std::size_t len) {
    std::vector<cplx> v(len);
    for (auto &z : v) z = cplx{rng.next_unit() - 0.5, rng.next_unit() - 0.5};
    return v;
}

std::vector<double> random_rvec(qem::SplitMix64 &rng, std::size_t len) {
    std::vector<double> v(len);
    for (auto &x : v) x = rng.next_unit() - 0.25;
    return v;
}

} // namespace

TEST_CASE("cmat2 applies an elementwise 2x2 combine") {
    qem::SplitMix64 rng(11);
    const std::size_t len = 7;
    auto a = random_cvec(rng, len);
    auto b = random_cvec(rng, len);
    auto u = random_cvec(rng, 4);
    auto a0 = a, b0 = b;
    qem::scalar_kernels().cmat2(a.data(), b.data(), u.data(), len);
    for (std::size_t i = 0; i < len; ++i) {
        CHECK(std::abs(a[i] - (u[0] * a0[i] + u[1] * b0[i])) < 1e-15);
        CHECK(std::abs(b[i] - (u[2] * a0[i] + u[3] * b0[i])) < 1e-15);
    }
}

TEST_CASE("cmat4 applies an elementwise 4x4 combine") {
    qem::SplitMix64 rng(12);
    const std::size_t len = 5;
    std::vector<std::vector<cplx>> r, r0;
    for (int i = 0; i < 4; ++i) r.push_back(random_cvec(rng, len));
    r0 = r;
    auto u = random_cvec(rng, 16);
    qem::scalar_kernels().cmat4(r[0].data(), r[1].data(), r[2].data(),
                                r[3].data(), u.data(), len);
    for (int row = 0; row < 4; ++row) {
        for (std::size_t i = 0; i < len; ++i) {
            cplx want{0.0, 0.0};
            for (int col = 0; col < 4; ++col) {
                want += u[row * 4 + col] * r0[col][i];
            }
            CHECK(std::abs(r[row][i] - want) < 1e-14);
        }
    }
}

TEST_CASE("cmix2 mixes the diagonal pair and scales coherences") {
    qem::SplitMix64 rng(13);
    const std::size_t len = 6;
    const double p = 0.3;
    auto a = random_cvec(rng, len), b = random_cvec(rng, len);
    auto c = random_cvec(rng, len), d = random_cvec(rng, len);
    auto a0 = a, b0 = b, c0 = c, d0 = d;
    qem::scalar_kernels().cmix2(a.data(), b.data(), c.data(), d.data(), p,
                                len);
    for (std::size_t i = 0; i < len; ++i) {
        const cplx avg = 0.5 * (a0[i] + d0[i]);
        CHECK(std::abs(a[i] - ((1 - p) * a0[i] + p * avg)) < 1e-15);
        CHECK(std::abs(d[i] - ((1 - p) * d0[i] + p * avg)) < 1e-15);
        CHECK(std::abs(b[i] - (1 - p) * b0[i]) < 1e-15);
        CHECK(std::abs(c[i] - (1 - p) * c0[i]) < 1e-15);
    }
}

TEST_CASE("cmix4 pulls diagonal runs toward their average") {
    qem::SplitMix64 rng(14);
    const std::size_t len = 3;
    const double p = 0.45;
    std::vector<std::vector<cplx>> grid, grid0;
    for (int i = 0; i < 16; ++i) grid.push_back(random_cvec(rng, len));
    grid0 = grid;
    cplx *blk[16];
    for (int i = 0; i < 16; ++i) blk[i] = grid[i].data();
    qem::scalar_kernels().cmix4(blk, p, len);
    for (std::size_t i = 0; i < len; ++i) {
        cplx avg{0.0, 0.0};
        for (int l = 0; l < 4; ++l) avg += grid0[l * 4 + l][i];
        avg *= 0.25;
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                const cplx want = r == c
                                      ? (1 - p) * grid0[r * 4 + c][i] + p * avg
                                      : (1 - p) * grid0[r * 4 + c][i];
                CHECK(std::abs(grid[r * 4 + c][i] - want) < 1e-15);
            }
        }
    }
}

TEST_CASE("relax shifts excited population and damps coherences") {
    qem::SplitMix64 rng(15);
    const std::size_t len = 9;
    const double g = 0.2, f = 0.8;
    auto a = random_cvec(rng, len), b = random_cvec(rng, len);
    auto c = random_cvec(rng, len), d = random_cvec(rng, len);
    auto a0 = a, b0 = b, c0 = c, d0 = d;
    qem::scalar_kernels().relax(a.data(), b.data(), c.data(), d.data(), g, f,
                                len);
    for (std::size_t i = 0; i < len; ++i) {
        CHECK(std::abs(a[i] - (a0[i] + g * d0[i])) < 1e-15);
        CHECK(std::abs(d[i] - (1 - g) * d0[i]) < 1e-15);
        CHECK(std::abs(b[i] - f * b0[i]) < 1e-15);
        CHECK(std::abs(c[i] - f * c0[i]) < 1e-15);
    }
}

TEST_CASE("real-vector kernels match naive formulas") {
    qem::SplitMix64 rng(16);
    auto x = random_rvec(rng, 11);
    auto y = random_rvec(rng, 11);
    const auto &k = qem::scalar_kernels();

    double want = 0.0;
    for (double v : x) want += v;
    CHECK(k.rsum(x.data(), x.size()) == doctest::Approx(want).epsilon(1e-14));

    auto y2 = y;
    k.raxpy(0.7, x.data(), y2.data(), x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(y2[i] == doctest::Approx(y[i] + 0.7 * x[i]).epsilon(1e-14));
    }

    auto x2 = x;
    k.rscale(x2.data(), 2.5, x2.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x2[i] == doctest::Approx(2.5 * x[i]).epsilon(1e-14));
    }

    auto x3 = x;
    k.rclamp0(x3.data(), x3.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        CHECK(x3[i] == (x[i] > 0.0 ? x[i] : 0.0));
    }

    double hell = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        hell += std::sqrt(std::max(x[i], 0.0) * std::max(y[i], 0.0));
    }
    CHECK(k.rhell(x.data(), y.data(), x.size()) ==
          doctest::Approx(hell).epsilon(1e-14));
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    if (!qem::avx2_available()) {
        MESSAGE("avx2 not available on this host; skipping");
        return;
    }
    const auto &sk = qem::scalar_kernels();
    const auto &vk = qem::avx2_kernels();
    qem::SplitMix64 rng(99);

    // Odd lengths exercise the vector tails.
    for (std::size_t len : {std::size_t{1}, std::size_t{2}, std::size_t{3},
                            std::size_t{5}, std::size_t{8}, std::size_t{13},
                            std::size_t{32}, std::size_t{33}}) {
        auto a = random_cvec(rng, len), b = random_cvec(rng, len);
        auto c = random_cvec(rng, len), d = random_cvec(rng, len);
        auto u2 = random_cvec(rng, 4);
        auto u4 = random_cvec(rng, 16);

        auto sa = a, sb = b;
        auto va = a, vb = b;
        sk.cmat2(sa.data(), sb.data(), u2.data(), len);
        vk.cmat2(va.data(), vb.data(), u2.data(), len);
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(std::abs(sa[i] - va[i]) < 1e-13);
            CHECK(std::abs(sb[i] - vb[i]) < 1e-13);
        }

        std::vector<std::vector<cplx>> rows{a, b, c, d}, vrows{a, b, c, d};
        sk.cmat4(rows[0].data(), rows[1].data(), rows[2].data(),
                 rows[3].data(), u4.data(), len);
        vk.cmat4(vrows[0].data(), vrows[1].data(), vrows[2].data(),
                 vrows[3].data(), u4.data(), len);
        for (int r = 0; r < 4; ++r) {
            for (std::size_t i = 0; i < len; ++i) {
                CHECK(std::abs(rows[r][i] - vrows[r][i]) < 1e-13);
            }
        }

        auto ma = a, mb = b, mc = c, md = d;
        auto na = a, nb = b, nc2 = c, nd = d;
        sk.cmix2(ma.data(), mb.data(), mc.data(), md.data(), 0.37, len);
        vk.cmix2(na.data(), nb.data(), nc2.data(), nd.data(), 0.37, len);
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(std::abs(ma[i] - na[i]) < 1e-13);
            CHECK(std::abs(mb[i] - nb[i]) < 1e-13);
            CHECK(std::abs(mc[i] - nc2[i]) < 1e-13);
            CHECK(std::abs(md[i] - nd[i]) < 1e-13);
        }

        std::vector<std::vector<cplx>> g1, g2;
        for (int i = 0; i < 16; ++i) g1.push_back(random_cvec(rng, len));
        g2 = g1;
        cplx *b1[16], *b2[16];
        for (int i = 0; i < 16; ++i) {
            b1[i] = g1[i].data();
            b2[i] = g2[i].data();
        }
        sk.cmix4(b1, 0.21, len);
        vk.cmix4(b2, 0.21, len);
        for (int i = 0; i < 16; ++i) {
            for (std::size_t j = 0; j < len; ++j) {
                CHECK(std::abs(g1[i][j] - g2[i][j]) < 1e-13);
            }
        }

        auto ra = a, rb = b, rc = c, rd = d;
        auto qa = a, qb = b, qc = c, qd = d;
        sk.relax(ra.data(), rb.data(), rc.data(), rd.data(), 0.15, 0.9, len);
        vk.relax(qa.data(), qb.data(), qc.data(), qd.data(), 0.15, 0.9, len);
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(std::abs(ra[i] - qa[i]) < 1e-13);
            CHECK(std::abs(rd[i] - qd[i]) < 1e-13);
        }

        auto x = random_rvec(rng, len);
        auto y = random_rvec(rng, len);
        CHECK(std::abs(sk.rsum(x.data(), len) - vk.rsum(x.data(), len)) <
              1e-13);
        CHECK(std::abs(sk.rhell(x.data(), y.data(), len) -
                       vk.rhell(x.data(), y.data(), len)) < 1e-13);
        auto y3 = y, y4 = y;
        sk.raxpy(1.3, x.data(), y3.data(), len);
        vk.raxpy(1.3, x.data(), y4.data(), len);
        for (std::size_t i = 0; i < len; ++i) {
            CHECK(std::abs(y3[i] - y4[i]) < 1e-13);
        }
    }
}

TEST_CASE("kernel dispatch reports a valid backend") {
    const std::string backend = qem::kernel_backend();
    CHECK((backend == "scalar" || backend == "avx2"));
    if (backend == "avx2") CHECK(qem::avx2_available());
}

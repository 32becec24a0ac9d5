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

#include <vector>

#include "doctest.h"
#include "qem/errors.hpp"
#include "qem/metrics.hpp"

TEST_CASE("hellinger_fidelity spans identical to disjoint") {
    const std::vector<double> p{0.5, 0.5, 0.0, 0.0};
    CHECK(qem::hellinger_fidelity(p, p) == doctest::Approx(1.0).epsilon(1e-14));

    const std::vector<double> q{0.0, 0.0, 0.5, 0.5};
    CHECK(qem::hellinger_fidelity(p, q) == doctest::Approx(0.0));

    // One shared state contributes sqrt(1.0 * 0.5); squared gives 0.5.
    const std::vector<double> r{0.0, 1.0};
    const std::vector<double> s{0.5, 0.5};
    CHECK(qem::hellinger_fidelity(r, s) == doctest::Approx(0.5).epsilon(1e-14));

    // Stray negative mass from an extrapolation counts as zero.
    const std::vector<double> neg{-0.2, 1.2};
    CHECK(qem::hellinger_fidelity(neg, {0.0, 1.0}) ==
          doctest::Approx(1.2).epsilon(1e-14));

    CHECK_THROWS_AS(qem::hellinger_fidelity({0.5, 0.5}, {1.0}),
                    qem::MetricsError);
}

TEST_CASE("total_variation is half the l1 distance") {
    CHECK(qem::total_variation({1.0, 0.0}, {0.0, 1.0}) ==
          doctest::Approx(1.0));
    CHECK(qem::total_variation({0.5, 0.5}, {0.5, 0.5}) ==
          doctest::Approx(0.0));
    CHECK(qem::total_variation({0.7, 0.3}, {0.5, 0.5}) ==
          doctest::Approx(0.2).epsilon(1e-14));
    CHECK_THROWS_AS(qem::total_variation({0.5, 0.5}, {1.0}),
                    qem::MetricsError);
}

TEST_CASE("abe and abr measure observable recovery") {
    CHECK(qem::abe(1.0, 0.8) == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(qem::abe(-0.5, 0.5) == doctest::Approx(1.0).epsilon(1e-14));

    // Mitigated lands at 0.96 from a noisy 0.8 against ideal 1: ratio 0.2.
    CHECK(qem::abr(1.0, 0.96, 0.8) == doctest::Approx(0.2).epsilon(1e-12));
    // Overshooting is penalized symmetrically.
    CHECK(qem::abr(1.0, 1.04, 0.8) == doctest::Approx(0.2).epsilon(1e-12));
    // A ratio above 1 flags a mitigation that hurt.
    CHECK(qem::abr(1.0, 0.5, 0.8) == doctest::Approx(2.5).epsilon(1e-12));

    CHECK_THROWS_AS(qem::abr(1.0, 0.9, 1.0), qem::MetricsError);
}

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
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qem/benchmarks.hpp"
#include "qem/circuit.hpp"
#include "qem/errors.hpp"

TEST_CASE("validate_circuit rejects malformed gates") {
    qem::Circuit c;
    c.width = 2;

    c.gates = {{"h", {0}}};
    CHECK_NOTHROW(qem::validate_circuit(c));

    c.gates = {{"h", {2}}};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);

    c.gates = {{"h", {-1}}};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);

    c.gates = {{"cx", {0}}};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);

    c.gates = {{"cx", {1, 1}}};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);

    c.gates = {{"qft", {0}}};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);

    c.gates = {};
    c.measured = {5};
    CHECK_THROWS_AS(qem::validate_circuit(c), qem::ValidationError);
}

TEST_CASE("inverse_gate maps each gate to its adjoint") {
    CHECK(qem::inverse_gate({"h", {0}}) == qem::Gate{"h", {0}});
    CHECK(qem::inverse_gate({"x", {0}}) == qem::Gate{"x", {0}});
    CHECK(qem::inverse_gate({"s", {1}}) == qem::Gate{"sdg", {1}});
    CHECK(qem::inverse_gate({"sdg", {1}}) == qem::Gate{"s", {1}});
    CHECK(qem::inverse_gate({"t", {0}}) == qem::Gate{"tdg", {0}});
    CHECK(qem::inverse_gate({"tdg", {0}}) == qem::Gate{"t", {0}});
    CHECK(qem::inverse_gate({"rx", {0}, 0.3}) == qem::Gate{"rx", {0}, -0.3});
    CHECK(qem::inverse_gate({"rzz", {0, 1}, 1.1}) ==
          qem::Gate{"rzz", {0, 1}, -1.1});
    CHECK(qem::inverse_gate({"cx", {0, 1}}) == qem::Gate{"cx", {0, 1}});
}

TEST_CASE("fold_global expands gates and keeps the measured set") {
    qem::Circuit c;
    c.width = 1;
    c.gates = {{"h", {0}}};
    c.measured = {0};

    CHECK(qem::fold_global(c, 0) == c);
    CHECK_THROWS_AS(qem::fold_global(c, -1), qem::ValidationError);

    const auto f1 = qem::fold_global(c, 1);
    CHECK(f1.gates.size() == 3);
    CHECK(f1.measured == c.measured);
    CHECK(f1.gates[0] == qem::Gate{"h", {0}});
    CHECK(f1.gates[1] == qem::Gate{"h", {0}});
    CHECK(f1.gates[2] == qem::Gate{"h", {0}});

    qem::Circuit st;
    st.width = 1;
    st.gates = {{"s", {0}}, {"t", {0}}};
    const auto f2 = qem::fold_global(st, 1);
    // U then U^dagger in reverse order with adjoints, then U again.
    REQUIRE(f2.gates.size() == 6);
    CHECK(f2.gates[0] == qem::Gate{"s", {0}});
    CHECK(f2.gates[1] == qem::Gate{"t", {0}});
    CHECK(f2.gates[2] == qem::Gate{"tdg", {0}});
    CHECK(f2.gates[3] == qem::Gate{"sdg", {0}});
    CHECK(f2.gates[4] == qem::Gate{"s", {0}});
    CHECK(f2.gates[5] == qem::Gate{"t", {0}});
}

TEST_CASE("fold_global preserves the noiseless distribution") {
    for (const std::string family : {"ghz", "hs", "qaoa", "vqe"}) {
        const int param = family == "hs" ? 2 : (family == "vqe" ? 1 : -1);
        const auto c = qem::generate_benchmark(family, 4, param);
        const auto base = oracle::statevector_distribution(c);
        for (int folds : {1, 2}) {
            const auto folded = qem::fold_global(c, folds);
            CHECK(folded.gates.size() ==
                  (2 * static_cast<std::size_t>(folds) + 1) * c.gates.size());
            const auto dist = oracle::statevector_distribution(folded);
            CHECK(oracle::tv_distance(base, dist) < 1e-12);
        }
    }
}

TEST_CASE("ghz statevector puts half the mass on each extreme state") {
    for (int n = 2; n <= 6; ++n) {
        const auto c = qem::generate_benchmark("ghz", n, -1);
        const auto dist = oracle::statevector_distribution(c);
        CHECK(dist[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(dist[dist.size() - 1] == doctest::Approx(0.5).epsilon(1e-12));
        double rest = 0.0;
        for (std::size_t s = 1; s + 1 < dist.size(); ++s) rest += dist[s];
        CHECK(rest < 1e-12);
    }
}

TEST_CASE("parse_pauli reads little-endian labels") {
    const auto p = qem::parse_pauli("ZIIZ");
    CHECK(p.width == 4);
    CHECK(p.zmask == 0b1001);

    CHECK(qem::parse_pauli("II").zmask == 0);
    CHECK_THROWS_AS(qem::parse_pauli("ZX"), qem::ParseError);
    CHECK_THROWS_AS(qem::parse_pauli(""), qem::ParseError);

    const auto az = qem::all_z(3);
    CHECK(az.width == 3);
    CHECK(az.zmask == 0b111);
}

TEST_CASE("expectation weighs states by parity") {
    // Uniform two-qubit distribution: every Z-type observable averages to 0.
    const std::vector<double> uniform{0.25, 0.25, 0.25, 0.25};
    CHECK(qem::expectation(uniform, qem::all_z(2)) ==
          doctest::Approx(0.0).epsilon(1e-15));

    const std::vector<double> ghz{0.5, 0.0, 0.0, 0.5};
    CHECK(qem::expectation(ghz, qem::all_z(2)) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(qem::expectation(ghz, qem::parse_pauli("ZI")) ==
          doctest::Approx(0.0).epsilon(1e-15));

    const std::vector<double> one{0.0, 1.0};
    CHECK(qem::expectation(one, qem::all_z(1)) ==
          doctest::Approx(-1.0).epsilon(1e-15));
}

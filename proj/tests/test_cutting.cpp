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

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "qem/benchmarks.hpp"
#include "qem/cutting.hpp"
#include "qem/density.hpp"
#include "qem/errors.hpp"
#include "qem/esp.hpp"

namespace {

std::string data_path(const std::string &name) {
    return std::string(QEM_DATA_DIR) + "/" + name;
}

qem::NoiseConfig noise_off() {
    qem::NoiseConfig nc;
    nc.depolarizing_enabled = false;
    nc.thermal_enabled = false;
    return nc;
}

} // namespace

TEST_CASE("find_cut severs a ghz chain in the middle") {
    const auto c = qem::generate_benchmark("ghz", 4, -1);
    const auto plan = qem::find_cut(c, 2);
    REQUIRE(plan.cuts.size() == 1);
    CHECK(plan.cuts[0] == qem::CutPoint{2, 2});
    CHECK(plan.qubits_a == std::vector<int>{0, 1, 2});
    CHECK(plan.qubits_b == std::vector<int>{2, 3});
    // h, cx(0,1), cx(1,2) upstream; cx(2,3) downstream.
    CHECK(plan.gate_side == std::vector<int>{0, 0, 0, 1});
}

TEST_CASE("find_cut needs two cuts for a ring") {
    const auto c = qem::generate_benchmark("qaoa", 4, -1);
    CHECK_THROWS_AS(qem::find_cut(c, 1), qem::CutError);

    const auto plan = qem::find_cut(c, 2);
    REQUIRE(plan.cuts.size() == 2);
    CHECK(plan.cuts[0] == qem::CutPoint{4, 0});
    CHECK(plan.cuts[1] == qem::CutPoint{5, 2});
    CHECK(plan.qubits_a == std::vector<int>{0, 1, 2});
    CHECK(plan.qubits_b == std::vector<int>{0, 2, 3});
}

TEST_CASE("find_cut gives up on all-to-all coupling") {
    const auto c = qem::generate_benchmark("qaoa_complete", 4, -1);
    CHECK_THROWS_AS(qem::find_cut(c, 2), qem::CutError);
    try {
        qem::find_cut(c, 2);
    } catch (const qem::CutError &e) {
        CHECK(std::string(e.what()).find("2") != std::string::npos);
    }
}

TEST_CASE("every plan reduces fragment width and reuses cut qubits") {
    for (int n : {4, 5, 6, 8}) {
        const auto c = qem::generate_benchmark("ghz", n, -1);
        const auto plan = qem::find_cut(c, 2);
        CHECK(static_cast<int>(plan.qubits_a.size()) < n);
        CHECK(static_cast<int>(plan.qubits_b.size()) < n);
        for (const auto &cut : plan.cuts) {
            CHECK(std::count(plan.qubits_a.begin(), plan.qubits_a.end(),
                             cut.qubit) == 1);
            CHECK(std::count(plan.qubits_b.begin(), plan.qubits_b.end(),
                             cut.qubit) == 1);
        }
    }
}

TEST_CASE("cut plans round-trip through json") {
    const auto c = qem::generate_benchmark("qaoa", 5, -1);
    const auto plan = qem::find_cut(c, 2);
    const auto back = qem::cut_plan_from_json(qem::cut_plan_to_json(plan));
    CHECK(back.cuts == plan.cuts);
    CHECK(back.gate_side == plan.gate_side);
    CHECK(back.qubits_a == plan.qubits_a);
    CHECK(back.qubits_b == plan.qubits_b);
}

TEST_CASE("build_subcircuits enumerates basis and preparation variants") {
    const auto c = qem::generate_benchmark("ghz", 4, -1);
    const auto plan = qem::find_cut(c, 2);
    const auto vs = qem::build_subcircuits(c, plan);

    REQUIRE(vs.num_cuts == 1);
    REQUIRE(vs.upstream.size() == 3);
    REQUIRE(vs.downstream.size() == 4);
    CHECK(vs.original_width == 4);
    CHECK(vs.qubits_a == plan.qubits_a);
    CHECK(vs.qubits_b == plan.qubits_b);

    // Upstream: X basis appends h, Y appends sdg then h, Z appends nothing.
    const auto base_n = vs.upstream[2].gates.size();
    CHECK(vs.upstream[0].gates.size() == base_n + 1);
    CHECK(vs.upstream[0].gates.back().name == "h");
    CHECK(vs.upstream[1].gates.size() == base_n + 2);
    CHECK(vs.upstream[1].gates[base_n].name == "sdg");
    CHECK(vs.upstream[1].gates.back().name == "h");

    // Downstream: |0> nothing, |1> x, |+> h, |+i> h then s, all prepended.
    const auto down_n = vs.downstream[0].gates.size();
    CHECK(vs.downstream[1].gates.size() == down_n + 1);
    CHECK(vs.downstream[1].gates[0].name == "x");
    CHECK(vs.downstream[2].gates.size() == down_n + 1);
    CHECK(vs.downstream[2].gates[0].name == "h");
    CHECK(vs.downstream[3].gates.size() == down_n + 2);
    CHECK(vs.downstream[3].gates[0].name == "h");
    CHECK(vs.downstream[3].gates[1].name == "s");

    // Preparation targets the cut qubit's local position in fragment B.
    REQUIRE(vs.cut_prep_local.size() == 1);
    CHECK(vs.downstream[1].gates[0].qubits[0] == vs.cut_prep_local[0]);

    // All fragment qubits are measured in every variant.
    for (const auto &u : vs.upstream) {
        CHECK(u.measured.size() == vs.qubits_a.size());
    }
    for (const auto &dn : vs.downstream) {
        CHECK(dn.measured.size() == vs.qubits_b.size());
    }

    const auto c2 = qem::generate_benchmark("qaoa", 4, -1);
    const auto vs2 = qem::build_subcircuits(c2, qem::find_cut(c2, 2));
    CHECK(vs2.num_cuts == 2);
    CHECK(vs2.upstream.size() == 9);
    CHECK(vs2.downstream.size() == 16);
}

TEST_CASE("noiseless reconstruction reproduces the whole circuit") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    for (const char *family : {"ghz", "hs"}) {
        const int n = family[0] == 'g' ? 4 : 5;
        const auto c = qem::generate_benchmark(family, n, 2);
        const auto want = oracle::statevector_distribution(c);

        const auto exec = qem::run_cut_variants(c, d, noise_off(), 2);
        const auto got = qem::cutqc_unmitigated(exec);
        REQUIRE(got.size() == want.size());
        CHECK(oracle::tv_distance(got, want) < 1e-10);

        // Without noise all three reconstructions coincide.
        const auto mc = qem::cutqc_mc(exec);
        const auto cm = qem::cutqc_cm(exec);
        CHECK(oracle::tv_distance(mc, want) < 1e-10);
        CHECK(oracle::tv_distance(cm, want) < 1e-10);
    }
}

TEST_CASE("recombine validates the variant table sizes") {
    const auto c = qem::generate_benchmark("ghz", 4, -1);
    const auto vs = qem::build_subcircuits(c, qem::find_cut(c, 2));
    std::vector<std::vector<double>> ups(3, std::vector<double>(8, 0.125));
    std::vector<std::vector<double>> downs(4, std::vector<double>(4, 0.25));
    CHECK_NOTHROW(qem::recombine(vs, ups, downs));

    std::vector<std::vector<double>> short_ups(2,
                                               std::vector<double>(8, 0.125));
    CHECK_THROWS_AS(qem::recombine(vs, short_ups, downs), qem::CutError);
    std::vector<std::vector<double>> bad_downs(4, std::vector<double>(2, 0.5));
    CHECK_THROWS_AS(qem::recombine(vs, ups, bad_downs), qem::CutError);
}

TEST_CASE("fragments are never less reliable than the whole circuit") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    qem::NoiseConfig nc;
    nc.thermal_enabled = false;
    for (const char *family : {"ghz", "hs", "qaoa"}) {
        const auto c = qem::generate_benchmark(family, 6, 2);
        const double whole = qem::compute_esp(c, d);
        const auto exec = qem::run_cut_variants(c, d, nc, 2);
        for (double e : exec.up_esp) CHECK(e >= whole * (1.0 - 1e-12));
        for (double e : exec.down_esp) CHECK(e >= whole * (1.0 - 1e-12));
    }
}

TEST_CASE("mitigated reconstruction beats the unmitigated one under noise") {
    const auto d = qem::load_device(data_path("device_uniform.json"));
    qem::NoiseConfig nc;
    nc.thermal_enabled = false;

    const auto c = qem::generate_benchmark("ghz", 6, -1);
    const auto ideal = oracle::statevector_distribution(c);
    const auto exec = qem::run_cut_variants(c, d, nc, 2);
    const auto unmit = qem::cutqc_unmitigated(exec);
    const auto mc = qem::cutqc_mc(exec);
    CHECK(oracle::tv_distance(mc, ideal) < oracle::tv_distance(unmit, ideal));
}

TEST_CASE("placement assigns each fragment its own device window") {
    const auto d = qem::load_device(data_path("device_hetero16.json"));
    qem::NoiseConfig nc;
    const auto c = qem::generate_benchmark("ghz", 8, -1);
    const auto exec = qem::run_cut_variants(c, d, nc, 2, true);
    // Fragment A spans five qubits, whose best window starts at 10;
    // fragment B spans four, whose best window starts at 0.
    CHECK(exec.window_full == 0);
    CHECK(exec.window_a == 10);
    CHECK(exec.window_b == 0);
    CHECK(exec.latency_ns > 0.0);

    const auto plain = qem::run_cut_variants(c, d, nc, 2, false);
    CHECK(plain.window_a == 0);
    CHECK(plain.window_b == 0);
}

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

#include "qem/cutting.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "qem/density.hpp"
#include "qem/errors.hpp"
#include "qem/esp.hpp"
#include "qem/kernels.hpp"
#include "qem/mitigation.hpp"

namespace qem {

namespace {

// Wire edge: the qubit's wire between two consecutive gates that use it.
struct WireEdge {
    int from_gate;
    int to_gate;
    int qubit;
};

std::vector<WireEdge> wire_edges(const Circuit &c) {
    std::map<int, int> last;
    std::vector<WireEdge> edges;
    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
        for (int q : c.gates[i].qubits) {
            auto it = last.find(q);
            if (it != last.end()) {
                edges.push_back({it->second, i, q});
            }
            last[q] = i;
        }
    }
    return edges;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) {
        const int ra = find(a), rb = find(b);
        if (ra != rb) parent[ra] = rb;
    }
};

struct Candidate {
    int ncuts;
    int balance;
    int neg_wa;
    std::vector<std::pair<int, int>> cuts; // (from_gate, qubit), sorted
    std::vector<int> gate_side;
    std::vector<int> qubits_a;
    std::vector<int> qubits_b;

    bool better_than(const Candidate &o) const {
        return std::tie(ncuts, balance, neg_wa, cuts) <
               std::tie(o.ncuts, o.balance, o.neg_wa, o.cuts);
    }
};

// Evaluates one removed-edge subset; returns false when it does not split
// the circuit into a valid ordered two-fragment partition.
bool consider(const Circuit &c, const std::vector<WireEdge> &edges,
              const std::vector<int> &removed, Candidate &out) {
    const int ng = static_cast<int>(c.gates.size());
    std::set<int> removed_set(removed.begin(), removed.end());
    UnionFind uf(ng);
    for (int k = 0; k < static_cast<int>(edges.size()); ++k) {
        if (removed_set.count(k)) continue;
        uf.unite(edges[k].from_gate, edges[k].to_gate);
    }
    std::vector<int> comp(ng);
    std::set<int> roots;
    for (int i = 0; i < ng; ++i) {
        comp[i] = uf.find(i);
        roots.insert(comp[i]);
    }
    if (roots.size() != 2) return false;

    int root_a;
    if (!removed.empty()) {
        root_a = comp[edges[removed[0]].from_gate];
        for (int k : removed) {
            if (comp[edges[k].from_gate] != root_a ||
                comp[edges[k].to_gate] == root_a) {
                return false;
            }
        }
    } else {
        root_a = comp[0];
    }

    std::set<int> qa, qb;
    out.gate_side.assign(ng, 0);
    for (int i = 0; i < ng; ++i) {
        const bool in_a = comp[i] == root_a;
        out.gate_side[i] = in_a ? 0 : 1;
        auto &dst = in_a ? qa : qb;
        dst.insert(c.gates[i].qubits.begin(), c.gates[i].qubits.end());
    }
    // Both fragments must be strictly narrower than the whole circuit;
    // otherwise the split buys nothing.
    if (static_cast<int>(std::max(qa.size(), qb.size())) >= c.width) {
        return false;
    }

    out.ncuts = static_cast<int>(removed.size());
    out.balance = std::abs(static_cast<int>(qa.size()) -
                           static_cast<int>(qb.size()));
    out.neg_wa = -static_cast<int>(qa.size());
    out.cuts.clear();
    for (int k : removed) {
        out.cuts.emplace_back(edges[k].from_gate, edges[k].qubit);
    }
    std::sort(out.cuts.begin(), out.cuts.end());
    out.qubits_a.assign(qa.begin(), qa.end());
    out.qubits_b.assign(qb.begin(), qb.end());
    return true;
}

CutPlan plan_from_candidate(const Candidate &cand) {
    CutPlan plan;
    for (const auto &[g, q] : cand.cuts) plan.cuts.push_back({g, q});
    plan.gate_side = cand.gate_side;
    plan.qubits_a = cand.qubits_a;
    plan.qubits_b = cand.qubits_b;
    return plan;
}

} // namespace

CutPlan find_cut(const Circuit &c, int max_cuts) {
    validate_circuit(c);
    if (max_cuts < 0) {
        throw ValidationError("cut budget must be nonnegative");
    }
    const std::vector<WireEdge> edges = wire_edges(c);
    const int ne = static_cast<int>(edges.size());

    // Fewer cuts always win, so search cut counts in increasing order and
    // stop at the first count that yields any valid partition.
    for (int ncut = 0; ncut <= max_cuts && ncut <= 2; ++ncut) {
        bool have = false;
        Candidate best{};
        Candidate cand{};
        auto offer = [&](const std::vector<int> &removed) {
            if (consider(c, edges, removed, cand) &&
                (!have || cand.better_than(best))) {
                best = cand;
                have = true;
            }
        };
        if (ncut == 0) {
            offer({});
        } else if (ncut == 1) {
            for (int k = 0; k < ne; ++k) offer({k});
        } else {
            for (int k = 0; k < ne; ++k) {
                for (int l = k + 1; l < ne; ++l) offer({k, l});
            }
        }
        if (have) return plan_from_candidate(best);
    }
    throw CutError("no two-fragment partition within " +
                   std::to_string(max_cuts) + " cuts");
}

nlohmann::json cut_plan_to_json(const CutPlan &plan) {
    nlohmann::json j;
    j["cuts"] = nlohmann::json::array();
    for (const CutPoint &cp : plan.cuts) {
        j["cuts"].push_back({cp.after_gate, cp.qubit});
    }
    j["gate_side"] = plan.gate_side;
    j["qubits_a"] = plan.qubits_a;
    j["qubits_b"] = plan.qubits_b;
    return j;
}

CutPlan cut_plan_from_json(const nlohmann::json &j) {
    CutPlan plan;
    for (const auto &c : j.at("cuts")) {
        plan.cuts.push_back({c.at(0).get<int>(), c.at(1).get<int>()});
    }
    plan.gate_side = j.at("gate_side").get<std::vector<int>>();
    plan.qubits_a = j.at("qubits_a").get<std::vector<int>>();
    plan.qubits_b = j.at("qubits_b").get<std::vector<int>>();
    return plan;
}

CutVariants build_subcircuits(const Circuit &c, const CutPlan &plan) {
    CutVariants vs;
    vs.original_width = c.width;
    vs.num_cuts = static_cast<int>(plan.cuts.size());
    vs.qubits_a = plan.qubits_a;
    vs.qubits_b = plan.qubits_b;

    std::map<int, int> la, lb;
    for (int i = 0; i < static_cast<int>(plan.qubits_a.size()); ++i) {
        la[plan.qubits_a[i]] = i;
    }
    for (int i = 0; i < static_cast<int>(plan.qubits_b.size()); ++i) {
        lb[plan.qubits_b[i]] = i;
    }

    Circuit base_a, base_b;
    base_a.width = static_cast<int>(plan.qubits_a.size());
    base_b.width = static_cast<int>(plan.qubits_b.size());
    for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
        const Gate &g = c.gates[i];
        Gate local = g;
        auto &map = plan.gate_side[i] == 0 ? la : lb;
        for (int &q : local.qubits) q = map.at(q);
        (plan.gate_side[i] == 0 ? base_a : base_b).gates.push_back(local);
    }
    for (int q = 0; q < base_a.width; ++q) base_a.measured.insert(q);
    for (int q = 0; q < base_b.width; ++q) base_b.measured.insert(q);

    for (const CutPoint &cp : plan.cuts) {
        vs.cut_measure_local.push_back(la.at(cp.qubit));
        vs.cut_prep_local.push_back(lb.at(cp.qubit));
    }

    const int K = vs.num_cuts;
    int n_up = 1, n_down = 1;
    for (int i = 0; i < K; ++i) {
        n_up *= 3;
        n_down *= 4;
    }

    // Measurement bases per cut digit (cut 0 most significant):
    // 0 = X (h), 1 = Y (sdg, h), 2 = Z (nothing).
    for (int v = 0; v < n_up; ++v) {
        Circuit var = base_a;
        int x = v;
        std::vector<int> digs(K);
        for (int j = K - 1; j >= 0; --j) {
            digs[j] = x % 3;
            x /= 3;
        }
        for (int j = 0; j < K; ++j) {
            const int q = vs.cut_measure_local[j];
            if (digs[j] == 0) {
                var.gates.push_back({"h", {q}, 0.0});
            } else if (digs[j] == 1) {
                var.gates.push_back({"sdg", {q}, 0.0});
                var.gates.push_back({"h", {q}, 0.0});
            }
        }
        vs.upstream.push_back(std::move(var));
    }

    // Preparations per cut digit: 0 = |0> (nothing), 1 = |1> (x),
    // 2 = |+> (h), 3 = |+i> (h, s). Prepended before fragment B's gates.
    for (int v = 0; v < n_down; ++v) {
        Circuit var;
        var.width = base_b.width;
        var.measured = base_b.measured;
        int x = v;
        std::vector<int> digs(K);
        for (int j = K - 1; j >= 0; --j) {
            digs[j] = x % 4;
            x /= 4;
        }
        for (int j = 0; j < K; ++j) {
            const int q = vs.cut_prep_local[j];
            if (digs[j] == 1) {
                var.gates.push_back({"x", {q}, 0.0});
            } else if (digs[j] == 2) {
                var.gates.push_back({"h", {q}, 0.0});
            } else if (digs[j] == 3) {
                var.gates.push_back({"h", {q}, 0.0});
                var.gates.push_back({"s", {q}, 0.0});
            }
        }
        var.gates.insert(var.gates.end(), base_b.gates.begin(),
                         base_b.gates.end());
        vs.downstream.push_back(std::move(var));
    }
    return vs;
}

std::vector<double> recombine(
    const CutVariants &vs, const std::vector<std::vector<double>> &up_dists,
    const std::vector<std::vector<double>> &down_dists) {
    const int K = vs.num_cuts;
    int n_up = 1, n_down = 1, n_pauli = 1;
    for (int i = 0; i < K; ++i) {
        n_up *= 3;
        n_down *= 4;
        n_pauli *= 4;
    }
    if (static_cast<int>(up_dists.size()) != n_up ||
        static_cast<int>(down_dists.size()) != n_down) {
        throw CutError("variant distribution count does not match the plan");
    }
    const int wa = static_cast<int>(vs.qubits_a.size());
    const int wb = static_cast<int>(vs.qubits_b.size());
    const std::size_t da = std::size_t{1} << wa;
    const std::size_t db = std::size_t{1} << wb;

    // Fragment A's kept local bits: everything not consumed by a cut.
    std::vector<int> oa;
    for (int i = 0; i < wa; ++i) {
        if (std::find(vs.cut_measure_local.begin(), vs.cut_measure_local.end(),
                      i) == vs.cut_measure_local.end()) {
            oa.push_back(i);
        }
    }
    const std::size_t dka = std::size_t{1} << oa.size();

    // Rows: Pauli digit (I, X, Y, Z); columns: preparation (|0>, |1>, |+>,
    // |+i>). Tr[P rho_prep] up to the 1/2 absorbed in the final 2^-K.
    static const double CMAT[4][4] = {{1, 1, 0, 0},
                                      {-1, -1, 2, 0},
                                      {-1, -1, 0, 2},
                                      {1, -1, 0, 0}};

    const KernelTable &kt = kernels();
    std::vector<double> out(std::size_t{1} << vs.original_width, 0.0);
    std::vector<double> ta(dka), tb(db);
    std::vector<int> pd(K);

    for (int pv = 0; pv < n_pauli; ++pv) {
        int x = pv;
        for (int j = K - 1; j >= 0; --j) {
            pd[j] = x % 4;
            x /= 4;
        }

        // The I digit reuses the Z-basis measurement; its sign weight is 1.
        int uv = 0;
        for (int d : pd) uv = uv * 3 + (d == 0 ? 2 : d - 1);
        const std::vector<double> &dist_a = up_dists[uv];
        if (dist_a.size() != da) {
            throw CutError("upstream distribution has the wrong length");
        }
        std::fill(ta.begin(), ta.end(), 0.0);
        for (std::size_t s = 0; s < da; ++s) {
            const double p = dist_a[s];
            if (p == 0.0) continue;
            double w = 1.0;
            std::size_t aidx = 0;
            for (std::size_t bi = 0; bi < oa.size(); ++bi) {
                aidx |= ((s >> oa[bi]) & 1) << bi;
            }
            for (int j = 0; j < K; ++j) {
                if (pd[j] != 0 && ((s >> vs.cut_measure_local[j]) & 1)) {
                    w = -w;
                }
            }
            ta[aidx] += w * p;
        }

        std::fill(tb.begin(), tb.end(), 0.0);
        std::vector<int> dd(K);
        for (int dv = 0; dv < n_down; ++dv) {
            int y = dv;
            for (int j = K - 1; j >= 0; --j) {
                dd[j] = y % 4;
                y /= 4;
            }
            double coef = 1.0;
            for (int j = 0; j < K; ++j) coef *= CMAT[pd[j]][dd[j]];
            if (coef == 0.0) continue;
            if (down_dists[dv].size() != db) {
                throw CutError("downstream distribution has the wrong length");
            }
            kt.raxpy(coef, down_dists[dv].data(), tb.data(), db);
        }

        for (std::size_t a = 0; a < dka; ++a) {
            if (ta[a] == 0.0) continue;
            std::size_t base = 0;
            for (std::size_t bi = 0; bi < oa.size(); ++bi) {
                base |= ((a >> bi) & 1)
                        << static_cast<std::size_t>(vs.qubits_a[oa[bi]]);
            }
            for (std::size_t b = 0; b < db; ++b) {
                if (tb[b] == 0.0) continue;
                std::size_t full = base;
                for (int i = 0; i < wb; ++i) {
                    full |= ((b >> i) & 1)
                            << static_cast<std::size_t>(vs.qubits_b[i]);
                }
                out[full] += ta[a] * tb[b];
            }
        }
    }

    kt.rscale(out.data(), std::ldexp(1.0, -K), out.size());
    kt.rclamp0(out.data(), out.size());
    const double s = kt.rsum(out.data(), out.size());
    if (!(s > 0.0)) {
        throw CutError("reconstructed distribution has no mass");
    }
    kt.rscale(out.data(), 1.0 / s, out.size());
    return out;
}

CutExecution run_cut_variants(const Circuit &c, const DeviceModel &d,
                              const NoiseConfig &nc, int max_cuts,
                              bool use_placement) {
    CutExecution exec;
    exec.plan = find_cut(c, max_cuts);
    exec.variants = build_subcircuits(c, exec.plan);

    const int wa = static_cast<int>(exec.plan.qubits_a.size());
    const int wb = static_cast<int>(exec.plan.qubits_b.size());
    if (use_placement) {
        exec.window_full = place(d, c.width);
        exec.window_a = place(d, wa);
        exec.window_b = place(d, wb);
    }
    const DeviceModel dev_a = d.window(exec.window_a, wa);
    const DeviceModel dev_b = d.window(exec.window_b, wb);

    const double full_esp = compute_esp(c, d, nc.depolarizing_scale);
    auto run = [&](const Circuit &var, const DeviceModel &dev,
                   std::vector<std::vector<double>> &dists,
                   std::vector<double> &esps) {
        SimResult sr = simulate(var, dev, nc);
        exec.latency_ns = std::max(exec.latency_ns, sr.latency_ns);
        dists.push_back(std::move(sr.probabilities));
        esps.push_back(effective_reliability(var, dev, nc));
        // Fragments carry subsets of the gate and measurement factors, so
        // their success probability can never fall below the whole
        // circuit's.
        assert(compute_esp(var, dev, nc.depolarizing_scale) >=
               full_esp * (1.0 - 1e-12));
    };
    (void)full_esp;
    for (const Circuit &var : exec.variants.upstream) {
        run(var, dev_a, exec.up_dists, exec.up_esp);
    }
    for (const Circuit &var : exec.variants.downstream) {
        run(var, dev_b, exec.down_dists, exec.down_esp);
    }
    return exec;
}

std::vector<double> cutqc_unmitigated(const CutExecution &exec) {
    return recombine(exec.variants, exec.up_dists, exec.down_dists);
}

std::vector<double> cutqc_mc(const CutExecution &exec, int top_k) {
    std::vector<std::vector<double>> ups, downs;
    ups.reserve(exec.up_dists.size());
    downs.reserve(exec.down_dists.size());
    for (std::size_t i = 0; i < exec.up_dists.size(); ++i) {
        ups.push_back(rzne_state(exec.up_dists[i], exec.up_esp[i], top_k));
    }
    for (std::size_t i = 0; i < exec.down_dists.size(); ++i) {
        downs.push_back(
            rzne_state(exec.down_dists[i], exec.down_esp[i], top_k));
    }
    return recombine(exec.variants, ups, downs);
}

std::vector<double> cutqc_cm(const CutExecution &exec, int top_k) {
    std::vector<double> rec = cutqc_unmitigated(exec);
    // Canonical variants: all-Z upstream is the last base-3 index, all-|0>
    // downstream is index 0.
    const double r = std::sqrt(exec.up_esp.back() * exec.down_esp.front());
    return rzne_state(rec, r, top_k);
}

} // namespace qem

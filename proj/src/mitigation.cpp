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

#include "qem/mitigation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "qem/cutting.hpp"
#include "qem/density.hpp"
#include "qem/errors.hpp"
#include "qem/esp.hpp"
#include "qem/kernels.hpp"

namespace qem {

namespace {

void require_distribution(const std::vector<double> &probs) {
    if (probs.empty() || (probs.size() & (probs.size() - 1)) != 0) {
        throw MitigationError("distribution length must be a power of two, got " +
                              std::to_string(probs.size()));
    }
}

// Clamp negatives, renormalize to sum 1.
std::vector<double> finish(std::vector<double> out) {
    const KernelTable &k = kernels();
    k.rclamp0(out.data(), out.size());
    const double s = k.rsum(out.data(), out.size());
    if (!(s > 0.0)) {
        throw MitigationError("extrapolated distribution has no mass left");
    }
    k.rscale(out.data(), 1.0 / s, out.size());
    return out;
}

} // namespace

std::vector<std::size_t> top_k_indices(const std::vector<double> &probs,
                                       int k) {
    std::vector<std::size_t> idx(probs.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    if (k <= 0 || static_cast<std::size_t>(k) >= probs.size()) {
        return idx;
    }
    // Stable sort on descending probability keeps ascending state order
    // among ties, so the boundary tie-break is the smaller index.
    std::stable_sort(idx.begin(), idx.end(),
                     [&probs](std::size_t a, std::size_t b) {
                         return probs[a] > probs[b];
                     });
    idx.resize(static_cast<std::size_t>(k));
    return idx;
}

std::vector<double> rzne_state(const std::vector<double> &noisy,
                               double reliability, int top_k) {
    require_distribution(noisy);
    if (!(reliability > 0.0)) {
        throw MitigationError("reliability must be positive for extrapolation");
    }
    const double r = reliability;
    const double mix = (1.0 - r) / (r * static_cast<double>(noisy.size()));
    std::vector<double> out = noisy;
    for (std::size_t s : top_k_indices(noisy, top_k)) {
        out[s] = noisy[s] / r - mix;
    }
    return finish(std::move(out));
}

double rzne_fit(const std::vector<RznePoint> &points,
                const RznePoint &infinite_point) {
    if (points.empty()) {
        throw MitigationError("extrapolation needs at least one point");
    }
    double num = 0.0;
    double den = 0.0;
    for (const RznePoint &p : points) {
        num += (p.mu - 1.0) * (p.value - infinite_point.value);
        den += (p.mu - 1.0) * (p.mu - 1.0);
    }
    if (den == 0.0) {
        throw MitigationError(
            "all points sit at the fully-mixed anchor; slope is undefined");
    }
    const double b = num / den;
    return infinite_point.value - b;
}

double unconstrained_intercept(const std::vector<RznePoint> &points) {
    if (points.size() < 2) {
        throw MitigationError(
            "an unconstrained line needs at least two points");
    }
    double sl = 0.0, se = 0.0, sll = 0.0, sle = 0.0;
    for (const RznePoint &p : points) {
        sl += p.mu;
        se += p.value;
        sll += p.mu * p.mu;
        sle += p.mu * p.value;
    }
    const double m = static_cast<double>(points.size());
    const double den = m * sll - sl * sl;
    if (den == 0.0) {
        throw MitigationError(
            "points share one abscissa; line is underdetermined");
    }
    const double slope = (m * sle - sl * se) / den;
    return (se - slope * sl) / m;
}

std::vector<double> slzne_invert_raw(const std::vector<double> &noisy,
                                     double latency, double t1) {
    require_distribution(noisy);
    if (latency < 0.0) {
        throw MitigationError("latency must be nonnegative");
    }
    if (!(t1 > 0.0)) {
        throw MitigationError("t1 must be positive");
    }
    std::vector<double> out(noisy.size());
    for (std::size_t s = 0; s < noisy.size(); ++s) {
        const int c = std::popcount(s);
        if (c > 0) {
            out[s] = noisy[s] / std::exp(-static_cast<double>(c) * latency / t1);
        } else {
            // Every excited state funnels toward all-zeros, so its share
            // shrinks backward in time; the inverted value can overshoot
            // [0, 1] and is clamped by definition.
            out[s] = std::min(
                1.0, std::max(0.0, (1.0 - noisy[s]) / std::exp(-latency / t1)));
        }
    }
    return out;
}

std::vector<double> slzne_state(const std::vector<double> &noisy,
                                double latency, double t1, int top_k) {
    const std::vector<double> raw = slzne_invert_raw(noisy, latency, t1);
    std::vector<double> out = noisy;
    for (std::size_t s : top_k_indices(noisy, top_k)) {
        out[s] = raw[s];
    }
    return finish(std::move(out));
}

PipelineResult mitigate_pipeline(const Circuit &c, const DeviceModel &d,
                                 const NoiseConfig &nc,
                                 const MitigationConfig &mc) {
    validate_circuit(c);
    PipelineResult res;
    res.esp = compute_esp(c, d, nc.depolarizing_scale);
    if (res.esp == 0.0) {
        throw MitigationError("success probability is zero; nothing to invert");
    }

    std::string prefix;
    if (res.esp <= mc.esp_threshold) {
        try {
            CutExecution exec = run_cut_variants(c, d, nc, mc.max_cuts,
                                                 mc.use_placement);
            res.probabilities = cutqc_mc(exec, mc.top_k);
            res.route = "cutqc_mc";
            res.latency_ns = exec.latency_ns;
            return res;
        } catch (const CutError &) {
            // No valid partition within budget: run the circuit whole.
            prefix = "no-cut:";
        }
    }

    SimResult sr = simulate(c, d, nc);
    res.latency_ns = sr.latency_ns;

    std::set<int> touched;
    for (const Gate &g : c.gates) touched.insert(g.qubits.begin(), g.qubits.end());
    const double t1 = d.min_t1(touched);

    std::vector<double> probs = sr.probabilities;
    if (sr.latency_ns > mc.slzne_latency_fraction * t1) {
        probs = slzne_state(probs, sr.latency_ns, d.median_t1(), mc.top_k);
        res.route = prefix + "slzne+rzne";
    } else {
        res.route = prefix + "rzne";
    }
    const double r = effective_reliability(c, d, nc);
    res.probabilities = rzne_state(probs, r, mc.top_k);
    return res;
}

double dzne_baseline(const Circuit &c, const DeviceModel &d,
                     const NoiseConfig &nc, const PauliString &obs,
                     const std::vector<int> &scale_factors) {
    if (scale_factors.size() < 2) {
        throw MitigationError("folding extrapolation needs at least two scale "
                              "factors");
    }
    std::vector<RznePoint> points;
    for (int lam : scale_factors) {
        if (lam < 1 || lam % 2 == 0) {
            throw MitigationError("scale factor must be odd and positive, got " +
                                  std::to_string(lam));
        }
        const Circuit folded = fold_global(c, (lam - 1) / 2);
        const SimResult sr = simulate(folded, d, nc);
        points.push_back({static_cast<double>(lam),
                          expectation(sr.probabilities, obs)});
    }
    return unconstrained_intercept(points);
}

} // namespace qem

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

#include <cstddef>
#include <string>
#include <vector>

#include "qem/circuit.hpp"
#include "qem/device.hpp"

namespace qem {

/// One observation for expectation-level extrapolation: mu is the noise
/// scale (1 - reliability, so mu = 0 is noise-free and mu = 1 fully mixed),
/// value the measured expectation there.
struct RznePoint {
    double mu = 0.0;
    double value = 0.0;
};

/// Indices of the k largest entries, largest first; ties at the boundary
/// keep the smaller basis-state index. k <= 0 or k >= size selects all.
std::vector<std::size_t> top_k_indices(const std::vector<double> &probs,
                                       int k);

/// Reliability-based linear extrapolation applied per basis state:
/// p'(s) = p(s)/r - ((1-r)/r) / 2^n, inverting a global white-noise mix of
/// strength 1 - r. With top_k > 0 only the K most probable states are
/// transformed and the rest keep their noisy values. Negative entries clamp
/// to 0 and the vector renormalizes to sum 1.
std::vector<double> rzne_state(const std::vector<double> &noisy,
                               double reliability, int top_k = 0);

/// Least-squares line constrained through the fully-mixed anchor
/// (mu = 1, infinite_point.value); returns the extrapolated value at mu = 0.
/// With one point this is exact two-point extrapolation.
double rzne_fit(const std::vector<RznePoint> &points,
                const RznePoint &infinite_point);

/// Ordinary unconstrained least-squares line through (mu, value) pairs;
/// returns the intercept at mu = 0. Needs two points at distinct abscissae.
double unconstrained_intercept(const std::vector<RznePoint> &points);

/// Latency-based exponential extrapolation: an excited state with c one-bits
/// decays as e^{-c t / t1}, so p'(s) = p(s) e^{c t / t1}. The all-zeros
/// state instead takes (1 - p(s)) e^{t / t1}, clamped to [0, 1] before
/// normalization (it grows as every excited state funnels into it). Top-K
/// and clamp/renormalize behave as in rzne_state.
std::vector<double> slzne_state(const std::vector<double> &noisy,
                                double latency, double t1, int top_k = 0);

/// The per-state extrapolated values before clamping and renormalization
/// (all-zeros branch still clamps to [0, 1] by definition). Exposed so the
/// exact-recovery property of the decay model is testable directly.
std::vector<double> slzne_invert_raw(const std::vector<double> &noisy,
                                     double latency, double t1);

struct MitigationConfig {
    /// States transformed per extrapolation; 0 means all of them.
    int top_k = 10;
    /// At or below this success probability the pipeline reroutes through
    /// wire cutting.
    double esp_threshold = 0.10;
    /// SLZNE engages when the schedule length exceeds this fraction of the
    /// smallest t1 among touched qubits.
    double slzne_latency_fraction = 0.7;
    /// Cut budget handed to the cutting route.
    int max_cuts = 2;
    /// Choose device windows by relaxation quality instead of offset 0.
    bool use_placement = false;
};

struct PipelineResult {
    std::vector<double> probabilities;
    /// "cutqc_mc", "slzne+rzne", or "rzne"; a failed cut search falls back
    /// to the direct path with a "no-cut:" prefix.
    std::string route;
    double esp = 0.0;
    double latency_ns = 0.0;
};

/// Serial mitigation pipeline: cut when the success probability is at or
/// below the threshold; otherwise simulate once and apply SLZNE (only when
/// the latency heuristic fires) followed by RZNE.
PipelineResult mitigate_pipeline(const Circuit &c, const DeviceModel &d,
                                 const NoiseConfig &nc,
                                 const MitigationConfig &mc = {});

/// Folding baseline: simulate the circuit at odd scale factors
/// (lambda -> (lambda - 1) / 2 global folds), fit an unconstrained line to
/// (lambda, expectation), return the intercept at lambda = 0.
double dzne_baseline(const Circuit &c, const DeviceModel &d,
                     const NoiseConfig &nc, const PauliString &obs,
                     const std::vector<int> &scale_factors = {1, 3, 5});

} // namespace qem

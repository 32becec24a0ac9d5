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

#include "qem/metrics.hpp"

#include <cmath>

#include "qem/errors.hpp"
#include "qem/kernels.hpp"

namespace qem {

namespace {

void require_same_length(const std::vector<double> &p,
                         const std::vector<double> &q) {
    if (p.size() != q.size() || p.empty()) {
        throw MetricsError("distributions must be nonempty and equal length");
    }
}

} // namespace

double hellinger_fidelity(const std::vector<double> &p,
                          const std::vector<double> &q) {
    require_same_length(p, q);
    const double s = kernels().rhell(p.data(), q.data(), p.size());
    return s * s;
}

double total_variation(const std::vector<double> &p,
                       const std::vector<double> &q) {
    require_same_length(p, q);
    double s = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
    return 0.5 * s;
}

double abe(double ideal_expectation, double observed_expectation) {
    return std::abs(ideal_expectation - observed_expectation);
}

double abr(double ideal_expectation, double mitigated_expectation,
           double noisy_expectation) {
    const double denom = abe(ideal_expectation, noisy_expectation);
    if (denom == 0.0) {
        throw MetricsError("zero noisy error; the error ratio is undefined");
    }
    return abe(ideal_expectation, mitigated_expectation) / denom;
}

} // namespace qem

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

#include <vector>

namespace qem {

/// (sum_s sqrt(p_s q_s))^2 with negative entries treated as zero. 1 for
/// identical distributions, 0 for disjoint support.
double hellinger_fidelity(const std::vector<double> &p,
                          const std::vector<double> &q);

/// (1/2) sum_s |p_s - q_s|.
double total_variation(const std::vector<double> &p,
                       const std::vector<double> &q);

/// Absolute observable error |ideal - observed|.
double abe(double ideal_expectation, double observed_expectation);

/// Error ratio |ideal - mitigated| / |ideal - noisy|; below 1 means the
/// mitigation helped. Throws MetricsError when the noisy error is exactly
/// zero (the ratio is undefined).
double abr(double ideal_expectation, double mitigated_expectation,
           double noisy_expectation);

} // namespace qem

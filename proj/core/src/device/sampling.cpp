// Copyright 2026 The nvaqs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nvaqs/device/sampling.hpp"

#include <algorithm>
#include <cmath>

namespace nvaqs::device {

ShotCounts sample_shots(const qsim::QuantumState& state, Basis basis, int qubit,
                        std::int64_t shots, Rng& rng) {
  return qsim::sample_shots(state, basis, qubit, shots, rng);
}

double three_sigma_bound(double mean, std::int64_t n) {
  const double variance = std::max(0.0, 1.0 - mean * mean);
  return 3.0 * std::sqrt(variance / static_cast<double>(n));
}

}  // namespace nvaqs::device

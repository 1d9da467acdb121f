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

#pragma once

#include <cstdint>

#include "nvaqs/qsim/state.hpp"
#include "nvaqs/qsim/tomography.hpp"
#include "nvaqs/rng.hpp"

namespace nvaqs::device {

using qsim::Basis;
using qsim::ShotCounts;

/// Measures `qubit` of `state` `shots` times in the given basis.
ShotCounts sample_shots(const qsim::QuantumState& state, Basis basis, int qubit,
                        std::int64_t shots, Rng& rng);

/// Half-width of the 3-sigma binomial interval for the mean of `n` +-1
/// outcomes with expectation `mean`.
double three_sigma_bound(double mean, std::int64_t n);

}  // namespace nvaqs::device

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
#include <random>

namespace nvaqs {

/// Engine behind every random draw. The helpers below consume its raw 64-bit
/// words directly instead of the standard distributions.
using Rng = std::mt19937_64;

/// Uniform integer in [0, bound) by rejection; bound must be > 0.
std::uint64_t uniform_index(Rng& rng, std::uint64_t bound);

/// Uniform double in [0, 1) with 53 random bits.
double uniform_unit(Rng& rng);

/// SplitMix64 finalizer. Used to derive independent child seeds from
/// (seed, stream) pairs so parallel work items never share RNG state.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace nvaqs

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

#include <Eigen/Core>

#include "nvaqs/common.hpp"
#include "nvaqs/qsim/state.hpp"
#include "nvaqs/rng.hpp"

namespace nvaqs::qsim {

/// Single-qubit reduced density matrix, tracing out every other qubit.
Eigen::Matrix2cd reduced_density_matrix(const QuantumState& state, int qubit);

enum class Basis { kX, kY };

struct ShotCounts {
  std::int64_t n_plus = 0;
  std::int64_t n_minus = 0;

  bool operator==(const ShotCounts&) const = default;
};

/// Projective measurement of one qubit in the x (H-rotated) or y
/// (S^dag H-rotated) basis, repeated `shots` times on copies of `state`.
ShotCounts sample_shots(const QuantumState& state, Basis basis, int qubit, std::int64_t shots,
                        Rng& rng);

/// <sigma_x> - i <sigma_y> of `qubit`, i.e. 2 rho_01, from the amplitudes.
Complex tomograph_electron(const QuantumState& state, int qubit);

/// Shot estimate: shots/2 measurements in each basis. Throws for shots < 2.
Complex tomograph_electron(const QuantumState& state, int qubit, std::int64_t shots, Rng& rng);

}  // namespace nvaqs::qsim

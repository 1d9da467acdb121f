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

#include "nvaqs/qsim/tomography.hpp"

#include <algorithm>
#include <string>

namespace nvaqs::qsim {

Eigen::Matrix2cd reduced_density_matrix(const QuantumState& state, int qubit) {
  if (qubit < 0 || qubit >= state.num_qubits()) {
    throw PreconditionError("qubit " + std::to_string(qubit) + " out of range");
  }
  const auto amps = state.amplitudes();
  const std::size_t stride = std::size_t{1} << qubit;
  double p0 = 0.0;
  double p1 = 0.0;
  Complex c01(0.0, 0.0);
  for (std::size_t hi = 0; hi < amps.size(); hi += 2 * stride) {
    for (std::size_t lo = hi; lo < hi + stride; ++lo) {
      const Complex a0 = amps[lo];
      const Complex a1 = amps[lo + stride];
      p0 += std::norm(a0);
      p1 += std::norm(a1);
      c01 += a0 * std::conj(a1);
    }
  }
  Eigen::Matrix2cd rho;
  rho << p0, c01, std::conj(c01), p1;
  return rho;
}

ShotCounts sample_shots(const QuantumState& state, Basis basis, int qubit, std::int64_t shots,
                        Rng& rng) {
  if (shots < 1) {
    throw PreconditionError("shots must be at least 1");
  }
  const Eigen::Matrix2cd rho = reduced_density_matrix(state, qubit);
  const double expectation =
      basis == Basis::kX ? 2.0 * rho(0, 1).real() : -2.0 * rho(0, 1).imag();
  const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
  ShotCounts counts;
  for (std::int64_t i = 0; i < shots; ++i) {
    if (uniform_unit(rng) < p_plus) {
      ++counts.n_plus;
    } else {
      ++counts.n_minus;
    }
  }
  return counts;
}

Complex tomograph_electron(const QuantumState& state, int qubit) {
  return 2.0 * reduced_density_matrix(state, qubit)(0, 1);
}

Complex tomograph_electron(const QuantumState& state, int qubit, std::int64_t shots, Rng& rng) {
  if (shots < 2) {
    throw PreconditionError("shot tomography needs at least 2 shots");
  }
  const std::int64_t per_basis = shots / 2;
  const auto x = sample_shots(state, Basis::kX, qubit, per_basis, rng);
  const auto y = sample_shots(state, Basis::kY, qubit, per_basis, rng);
  const double n = static_cast<double>(per_basis);
  const double sx = static_cast<double>(x.n_plus - x.n_minus) / n;
  const double sy = static_cast<double>(y.n_plus - y.n_minus) / n;
  return {sx, -sy};
}

}  // namespace nvaqs::qsim

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
#include <span>
#include <vector>

#include <Eigen/Core>

#include "nvaqs/common.hpp"
#include "nvaqs/qsim/circuit.hpp"
#include "nvaqs/rng.hpp"

namespace nvaqs::qsim {

/// Largest register the simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Dense state vector. Qubit q is bit q of the basis index (little endian).
class QuantumState {
 public:
  /// |0...0> on `num_qubits` qubits. Throws CapacityError above kMaxQubits.
  explicit QuantumState(int num_qubits);

  [[nodiscard]] int num_qubits() const { return num_qubits_; }
  [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
  [[nodiscard]] std::span<const Complex> amplitudes() const { return amplitudes_; }
  [[nodiscard]] std::span<Complex> amplitudes() { return amplitudes_; }

  /// Back to |0...0> without reallocating.
  void reset();

  [[nodiscard]] double norm() const;

  /// Applies one gate. Stochastic gates need `rng`; without it they throw.
  void apply(const GateOp& gate, Rng* rng = nullptr);
  void apply(const Circuit& circuit, Rng* rng = nullptr);

  void apply_matrix(const Eigen::Matrix2cd& m, int q);
  void apply_controlled_matrix(const Eigen::Matrix2cd& m, int control, int target);
  void apply_cx(int control, int target);
  void apply_swap(int a, int b);
  void apply_rz(double theta, int q);
  void apply_rzz(double angle, int a, int b);
  /// Pauli by index: 0 = I, 1 = X, 2 = Y, 3 = Z.
  void apply_pauli(int pauli, int q);

 private:
  void check_qubit(int q) const;

  int num_qubits_;
  std::vector<Complex> amplitudes_;
};

}  // namespace nvaqs::qsim

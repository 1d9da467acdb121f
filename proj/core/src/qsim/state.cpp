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

#include "nvaqs/qsim/state.hpp"

#include <cmath>
#include <utility>

namespace nvaqs::qsim {
namespace {

// a * x + b * y in plain real arithmetic.
inline Complex dot2(Complex a, Complex x, Complex b, Complex y) {
  return {a.real() * x.real() - a.imag() * x.imag() + b.real() * y.real() - b.imag() * y.imag(),
          a.real() * x.imag() + a.imag() * x.real() + b.real() * y.imag() + b.imag() * y.real()};
}

inline Complex mul(Complex a, Complex x) {
  return {a.real() * x.real() - a.imag() * x.imag(), a.real() * x.imag() + a.imag() * x.real()};
}

}  // namespace

QuantumState::QuantumState(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1) {
    throw PreconditionError("a state needs at least one qubit");
  }
  if (num_qubits > kMaxQubits) {
    throw CapacityError("state of " + std::to_string(num_qubits) + " qubits exceeds the " +
                        std::to_string(kMaxQubits) + "-qubit capacity");
  }
  amplitudes_.assign(std::size_t{1} << num_qubits, Complex(0.0, 0.0));
  amplitudes_[0] = 1.0;
}

void QuantumState::reset() {
  std::fill(amplitudes_.begin(), amplitudes_.end(), Complex(0.0, 0.0));
  amplitudes_[0] = 1.0;
}

double QuantumState::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) {
    sum += std::norm(a);
  }
  return std::sqrt(sum);
}

void QuantumState::check_qubit(int q) const {
  if (q < 0 || q >= num_qubits_) {
    throw PreconditionError("qubit " + std::to_string(q) + " out of range");
  }
}

void QuantumState::apply_matrix(const Eigen::Matrix2cd& m, int q) {
  check_qubit(q);
  const std::size_t stride = std::size_t{1} << q;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  Complex* a = amplitudes_.data();
  for (std::size_t hi = 0; hi < amplitudes_.size(); hi += 2 * stride) {
    for (std::size_t lo = hi; lo < hi + stride; ++lo) {
      const Complex v0 = a[lo];
      const Complex v1 = a[lo + stride];
      a[lo] = dot2(m00, v0, m01, v1);
      a[lo + stride] = dot2(m10, v0, m11, v1);
    }
  }
}

void QuantumState::apply_controlled_matrix(const Eigen::Matrix2cd& m, int control, int target) {
  check_qubit(control);
  check_qubit(target);
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t stride = std::size_t{1} << target;
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  Complex* a = amplitudes_.data();
  for (std::size_t hi = 0; hi < amplitudes_.size(); hi += 2 * stride) {
    for (std::size_t lo = hi; lo < hi + stride; ++lo) {
      if ((lo & cmask) == 0) {
        continue;
      }
      const Complex v0 = a[lo];
      const Complex v1 = a[lo + stride];
      a[lo] = dot2(m00, v0, m01, v1);
      a[lo + stride] = dot2(m10, v0, m11, v1);
    }
  }
}

void QuantumState::apply_cx(int control, int target) {
  check_qubit(control);
  check_qubit(target);
  const std::size_t cmask = std::size_t{1} << control;
  const std::size_t tmask = std::size_t{1} << target;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & cmask) != 0 && (i & tmask) == 0) {
      std::swap(amplitudes_[i], amplitudes_[i | tmask]);
    }
  }
}

void QuantumState::apply_swap(int a, int b) {
  check_qubit(a);
  check_qubit(b);
  const std::size_t amask = std::size_t{1} << a;
  const std::size_t bmask = std::size_t{1} << b;
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    if ((i & amask) != 0 && (i & bmask) == 0) {
      std::swap(amplitudes_[i], amplitudes_[(i ^ amask) | bmask]);
    }
  }
}

void QuantumState::apply_rz(double theta, int q) {
  check_qubit(q);
  const std::size_t mask = std::size_t{1} << q;
  const Complex p0 = std::polar(1.0, -0.5 * theta);
  const Complex p1 = std::polar(1.0, 0.5 * theta);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    amplitudes_[i] = mul((i & mask) ? p1 : p0, amplitudes_[i]);
  }
}

void QuantumState::apply_rzz(double angle, int a, int b) {
  check_qubit(a);
  check_qubit(b);
  const std::size_t amask = std::size_t{1} << a;
  const std::size_t bmask = std::size_t{1} << b;
  const Complex even = std::polar(1.0, -0.5 * angle);
  const Complex odd = std::polar(1.0, 0.5 * angle);
  for (std::size_t i = 0; i < amplitudes_.size(); ++i) {
    const bool parity = ((i & amask) != 0) != ((i & bmask) != 0);
    amplitudes_[i] = mul(parity ? odd : even, amplitudes_[i]);
  }
}

void QuantumState::apply_pauli(int pauli, int q) {
  Eigen::Matrix2cd m;
  switch (pauli) {
    case 0:
      return;
    case 1:
      m << 0, 1, 1, 0;
      break;
    case 2:
      m << 0, Complex(0, -1), Complex(0, 1), 0;
      break;
    case 3:
      m << 1, 0, 0, -1;
      break;
    default:
      throw PreconditionError("pauli index must be 0..3");
  }
  apply_matrix(m, q);
}

void QuantumState::apply(const GateOp& gate, Rng* rng) {
  const int a = gate.qubits[0];
  const int b = gate.qubits[1];
  if (gate.arity() == 2 && a == b) {
    throw PreconditionError("two-qubit gate with repeated qubit");
  }
  switch (gate.kind) {
    case GateKind::kH:
    case GateKind::kX:
    case GateKind::kU:
    case GateKind::kGPhaseU:
      apply_matrix(single_qubit_matrix(gate), a);
      return;
    case GateKind::kRZ:
      apply_rz(gate.params[0], a);
      return;
    case GateKind::kCX:
      apply_cx(a, b);
      return;
    case GateKind::kCU:
      apply_controlled_matrix(single_qubit_matrix(gate), a, b);
      return;
    case GateKind::kSwap:
      apply_swap(a, b);
      return;
    case GateKind::kRZZ:
      apply_rzz(gate.params[0], a, b);
      return;
    case GateKind::kDepolarize2: {
      if (rng == nullptr) {
        throw PreconditionError("stochastic gate applied without an rng");
      }
      if (uniform_unit(*rng) < gate.params[0]) {
        // Uniform over the 15 non-identity two-qubit Paulis.
        const auto which = 1 + static_cast<int>(uniform_index(*rng, 15));
        apply_pauli(which % 4, a);
        apply_pauli(which / 4, b);
      }
      return;
    }
  }
}

void QuantumState::apply(const Circuit& circuit, Rng* rng) {
  if (circuit.num_qubits != num_qubits_) {
    throw PreconditionError("circuit width does not match the state");
  }
  for (const auto& g : circuit.gates) {
    apply(g, rng);
  }
}

}  // namespace nvaqs::qsim

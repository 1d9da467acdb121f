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

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "nvaqs/common.hpp"

namespace nvaqs::qsim {

enum class GateKind {
  kH,
  kX,
  kCX,
  kRZ,      // (theta)
  kU,       // (theta, phi, lambda)
  kGPhaseU, // (theta, phi, lambda, gamma): e^{i gamma} U
  kCU,      // (theta, phi, lambda, gamma): controlled e^{i gamma} U
  kSwap,
  kRZZ,         // (angle): exp(-i angle Z(x)Z / 2)
  kDepolarize2, // (probability): stochastic two-qubit depolarizing channel
};

std::string_view gate_name(GateKind kind);
GateKind gate_kind_from_name(std::string_view name);
int gate_arity(GateKind kind);
int gate_param_count(GateKind kind);

/// Number of CX gates the gate costs on hardware: SWAP = 3, CU = 2 (the
/// standard two-CX decomposition), CX = 1, everything else 0.
int cx_cost(GateKind kind);

struct GateOp {
  GateKind kind = GateKind::kH;
  std::array<int, 2> qubits{0, -1};
  std::array<double, 4> params{};

  [[nodiscard]] int arity() const { return gate_arity(kind); }
  [[nodiscard]] bool is_stochastic() const { return kind == GateKind::kDepolarize2; }

  bool operator==(const GateOp&) const = default;
};

GateOp h(int q);
GateOp x(int q);
GateOp cx(int control, int target);
GateOp rz(int q, double theta);
GateOp u(int q, double theta, double phi, double lambda);
GateOp gphase_u(int q, double theta, double phi, double lambda, double gamma);
GateOp cu(int control, int target, double theta, double phi, double lambda, double gamma);
GateOp swap(int a, int b);
GateOp rzz(int a, int b, double angle);
GateOp depolarize2(int a, int b, double probability);

/// U(theta, phi, lambda) = [[cos, -e^{i lambda} sin], [e^{i phi} sin, e^{i(lambda+phi)} cos]]
/// with half-angle arguments.
Eigen::Matrix2cd u_matrix(double theta, double phi, double lambda);

/// The 2x2 matrix a single-qubit gate applies, or the target block of a CU.
Eigen::Matrix2cd single_qubit_matrix(const GateOp& gate);

struct Circuit {
  int num_qubits = 0;
  std::vector<GateOp> gates;

  /// Throws PreconditionError on out-of-range or repeated indices or
  /// non-finite parameters.
  void validate() const;

  /// ASAP layering: each gate goes one layer after the latest gate already
  /// placed on any of its qubits. Returns gate indices per layer.
  [[nodiscard]] std::vector<std::vector<std::size_t>> layers() const;

  [[nodiscard]] bool has_stochastic_gates() const;
};

/// Debug dump: [{"kind": "cu", "qubits": [0, 1], "params": [...]}, ...]
nlohmann::json circuit_to_json(const Circuit& circuit);
Circuit circuit_from_json(const nlohmann::json& j, int num_qubits);

}  // namespace nvaqs::qsim

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

#include "nvaqs/qsim/circuit.hpp"

#include <algorithm>
#include <cmath>

namespace nvaqs::qsim {
namespace {

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int arity;
  int params;
};

constexpr KindInfo kKinds[] = {
    {GateKind::kH, "h", 1, 0},          {GateKind::kX, "x", 1, 0},
    {GateKind::kCX, "cx", 2, 0},        {GateKind::kRZ, "rz", 1, 1},
    {GateKind::kU, "u", 1, 3},          {GateKind::kGPhaseU, "gphase_u", 1, 4},
    {GateKind::kCU, "cu", 2, 4},        {GateKind::kSwap, "swap", 2, 0},
    {GateKind::kRZZ, "rzz", 2, 1},      {GateKind::kDepolarize2, "depolarize2", 2, 1},
};

const KindInfo& info(GateKind kind) {
  for (const auto& k : kKinds) {
    if (k.kind == kind) {
      return k;
    }
  }
  throw PreconditionError("unknown gate kind");
}

GateOp make(GateKind kind, int a, int b, std::array<double, 4> params = {}) {
  return GateOp{kind, {a, b}, params};
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

GateKind gate_kind_from_name(std::string_view name) {
  for (const auto& k : kKinds) {
    if (k.name == name) {
      return k.kind;
    }
  }
  throw PreconditionError("unknown gate kind '" + std::string(name) + "'");
}

int gate_arity(GateKind kind) { return info(kind).arity; }
int gate_param_count(GateKind kind) { return info(kind).params; }

int cx_cost(GateKind kind) {
  switch (kind) {
    case GateKind::kCX:
      return 1;
    case GateKind::kCU:
      return 2;
    case GateKind::kSwap:
      return 3;
    default:
      return 0;
  }
}

GateOp h(int q) { return make(GateKind::kH, q, -1); }
GateOp x(int q) { return make(GateKind::kX, q, -1); }
GateOp cx(int control, int target) { return make(GateKind::kCX, control, target); }
GateOp rz(int q, double theta) { return make(GateKind::kRZ, q, -1, {theta, 0, 0, 0}); }
GateOp u(int q, double theta, double phi, double lambda) {
  return make(GateKind::kU, q, -1, {theta, phi, lambda, 0});
}
GateOp gphase_u(int q, double theta, double phi, double lambda, double gamma) {
  return make(GateKind::kGPhaseU, q, -1, {theta, phi, lambda, gamma});
}
GateOp cu(int control, int target, double theta, double phi, double lambda, double gamma) {
  return make(GateKind::kCU, control, target, {theta, phi, lambda, gamma});
}
GateOp swap(int a, int b) { return make(GateKind::kSwap, a, b); }
GateOp rzz(int a, int b, double angle) { return make(GateKind::kRZZ, a, b, {angle, 0, 0, 0}); }
GateOp depolarize2(int a, int b, double probability) {
  return make(GateKind::kDepolarize2, a, b, {probability, 0, 0, 0});
}

Eigen::Matrix2cd u_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(0.5 * theta);
  const double s = std::sin(0.5 * theta);
  Eigen::Matrix2cd m;
  m << Complex(c, 0.0), -std::polar(s, lambda), std::polar(s, phi), std::polar(c, lambda + phi);
  return m;
}

Eigen::Matrix2cd single_qubit_matrix(const GateOp& gate) {
  const auto& p = gate.params;
  Eigen::Matrix2cd m;
  switch (gate.kind) {
    case GateKind::kH: {
      const double r = 1.0 / std::sqrt(2.0);
      m << r, r, r, -r;
      return m;
    }
    case GateKind::kX:
    case GateKind::kCX:
      m << 0, 1, 1, 0;
      return m;
    case GateKind::kRZ:
      m << std::polar(1.0, -0.5 * p[0]), 0, 0, std::polar(1.0, 0.5 * p[0]);
      return m;
    case GateKind::kU:
      return u_matrix(p[0], p[1], p[2]);
    case GateKind::kGPhaseU:
    case GateKind::kCU:
      return std::polar(1.0, p[3]) * u_matrix(p[0], p[1], p[2]);
    default:
      throw PreconditionError("gate '" + std::string(gate_name(gate.kind)) +
                              "' has no single-qubit matrix");
  }
}

void Circuit::validate() const {
  for (const auto& g : gates) {
    const int arity = g.arity();
    for (int i = 0; i < arity; ++i) {
      const int q = g.qubits[static_cast<std::size_t>(i)];
      if (q < 0 || q >= num_qubits) {
        throw PreconditionError("gate '" + std::string(gate_name(g.kind)) + "' qubit " +
                                std::to_string(q) + " out of range for " +
                                std::to_string(num_qubits) + " qubits");
      }
    }
    if (arity == 2 && g.qubits[0] == g.qubits[1]) {
      throw PreconditionError("two-qubit gate '" + std::string(gate_name(g.kind)) +
                              "' acts twice on qubit " + std::to_string(g.qubits[0]));
    }
    for (int i = 0; i < gate_param_count(g.kind); ++i) {
      if (!std::isfinite(g.params[static_cast<std::size_t>(i)])) {
        throw PreconditionError("gate '" + std::string(gate_name(g.kind)) +
                                "' has a non-finite parameter");
      }
    }
    if (g.kind == GateKind::kDepolarize2 && !(g.params[0] >= 0.0 && g.params[0] <= 1.0)) {
      throw PreconditionError("depolarizing probability must lie in [0, 1]");
    }
  }
}

std::vector<std::vector<std::size_t>> Circuit::layers() const {
  std::vector<int> front(static_cast<std::size_t>(num_qubits), 0);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const auto& g = gates[i];
    int layer = 0;
    for (int k = 0; k < g.arity(); ++k) {
      layer = std::max(layer, front[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(k)])]);
    }
    if (static_cast<std::size_t>(layer) >= out.size()) {
      out.resize(static_cast<std::size_t>(layer) + 1);
    }
    out[static_cast<std::size_t>(layer)].push_back(i);
    for (int k = 0; k < g.arity(); ++k) {
      front[static_cast<std::size_t>(g.qubits[static_cast<std::size_t>(k)])] = layer + 1;
    }
  }
  return out;
}

bool Circuit::has_stochastic_gates() const {
  return std::any_of(gates.begin(), gates.end(), [](const GateOp& g) { return g.is_stochastic(); });
}

nlohmann::json circuit_to_json(const Circuit& circuit) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& g : circuit.gates) {
    nlohmann::json qubits = nlohmann::json::array();
    for (int k = 0; k < g.arity(); ++k) {
      qubits.push_back(g.qubits[static_cast<std::size_t>(k)]);
    }
    nlohmann::json params = nlohmann::json::array();
    for (int k = 0; k < gate_param_count(g.kind); ++k) {
      params.push_back(g.params[static_cast<std::size_t>(k)]);
    }
    out.push_back({{"kind", gate_name(g.kind)}, {"qubits", qubits}, {"params", params}});
  }
  return out;
}

Circuit circuit_from_json(const nlohmann::json& j, int num_qubits) {
  Circuit c{num_qubits, {}};
  for (const auto& item : j) {
    GateOp g;
    g.kind = gate_kind_from_name(item.at("kind").get<std::string>());
    const auto& qubits = item.at("qubits");
    const auto& params = item.at("params");
    if (static_cast<int>(qubits.size()) != gate_arity(g.kind) ||
        static_cast<int>(params.size()) != gate_param_count(g.kind)) {
      throw PreconditionError("gate '" + std::string(gate_name(g.kind)) +
                              "' has the wrong number of qubits or params");
    }
    for (std::size_t k = 0; k < qubits.size(); ++k) {
      g.qubits[k] = qubits[k].get<int>();
    }
    for (std::size_t k = 0; k < params.size(); ++k) {
      g.params[k] = params[k].get<double>();
    }
    c.gates.push_back(g);
  }
  c.validate();
  return c;
}

}  // namespace nvaqs::qsim

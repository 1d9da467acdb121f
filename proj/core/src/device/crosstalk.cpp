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

#include "nvaqs/device/crosstalk.hpp"

#include <cmath>
#include <set>

#include "nvaqs/device/routing.hpp"

namespace nvaqs::device {

qsim::Circuit apply_crosstalk(const qsim::Circuit& circuit, const DeviceProfile& profile) {
  std::set<int> active;
  for (const auto& g : circuit.gates) {
    for (int k = 0; k < g.arity(); ++k) {
      active.insert(g.qubits[k]);
    }
  }
  std::vector<qsim::GateOp> kicks;
  for (const auto& c : profile.crosstalk) {
    const double angle = c.j * c.tau;
    if (angle != 0.0 && active.contains(c.pair[0]) && active.contains(c.pair[1]) &&
        c.pair[0] < circuit.num_qubits && c.pair[1] < circuit.num_qubits) {
      kicks.push_back(qsim::rzz(c.pair[0], c.pair[1], angle));
    }
  }
  if (kicks.empty()) {
    return circuit;
  }
  qsim::Circuit out;
  out.num_qubits = circuit.num_qubits;
  for (const auto& layer : circuit.layers()) {
    for (std::size_t idx : layer) {
      out.gates.push_back(circuit.gates[idx]);
    }
    out.gates.insert(out.gates.end(), kicks.begin(), kicks.end());
  }
  return out;
}

qsim::Circuit apply_gate_errors(const qsim::Circuit& circuit, double probability) {
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw PreconditionError("gate error probability must lie in [0, 1]");
  }
  if (probability == 0.0) {
    return circuit;
  }
  qsim::Circuit out;
  out.num_qubits = circuit.num_qubits;
  for (const auto& g : circuit.gates) {
    out.gates.push_back(g);
    const int cost = qsim::cx_cost(g.kind);
    if (cost > 0) {
      const double p = 1.0 - std::pow(1.0 - probability, cost);
      out.gates.push_back(qsim::depolarize2(g.qubits[0], g.qubits[1], p));
    }
  }
  return out;
}

std::function<qsim::Circuit(const qsim::Circuit&)> noisy_transform(const DeviceProfile& profile,
                                                                   std::string_view placement,
                                                                   int num_pairs) {
  profile.validate();
  const auto map = profile.placement(placement, num_pairs).logical_to_physical(num_pairs);
  return [profile, map](const qsim::Circuit& logical) {
    auto routed = route_remote_cu(logical, profile.coupling_map, profile.num_qubits, map);
    auto noisy = apply_gate_errors(apply_crosstalk(routed.circuit, profile), profile.gate_error);
    return compact(noisy, map);
  };
}

}  // namespace nvaqs::device

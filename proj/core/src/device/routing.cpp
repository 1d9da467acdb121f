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

#include "nvaqs/device/routing.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <string>

#include "nvaqs/common.hpp"

namespace nvaqs::device {

std::vector<int> shortest_path(const std::vector<std::vector<int>>& adjacency, int from, int to) {
  const int n = static_cast<int>(adjacency.size());
  if (from < 0 || from >= n || to < 0 || to >= n) {
    throw PreconditionError("path endpoint not on the device");
  }
  std::vector<int> parent(n, -1);
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(from);
  seen[from] = true;
  while (!frontier.empty() && !seen[to]) {
    const int v = frontier.front();
    frontier.pop();
    for (int w : adjacency[v]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = v;
        frontier.push(w);
      }
    }
  }
  if (!seen[to]) {
    throw PreconditionError("qubits " + std::to_string(from) + " and " + std::to_string(to) +
                            " are disconnected");
  }
  std::vector<int> path{to};
  while (path.back() != from) {
    path.push_back(parent[path.back()]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

RoutedCircuit count_gates(qsim::Circuit circuit) {
  RoutedCircuit routed;
  for (const auto& g : circuit.gates) {
    routed.cnot_count += qsim::cx_cost(g.kind);
  }
  routed.depth = static_cast<int>(circuit.layers().size());
  routed.circuit = std::move(circuit);
  return routed;
}

RoutedCircuit route_remote_cu(const qsim::Circuit& circuit,
                              const std::vector<Edge>& coupling_map, int num_physical,
                              const std::vector<int>& logical_to_physical) {
  circuit.validate();
  if (static_cast<int>(logical_to_physical.size()) < circuit.num_qubits) {
    throw PreconditionError("placement does not cover every circuit qubit");
  }
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_physical));
  for (const auto& e : coupling_map) {
    if (e[0] < 0 || e[0] >= num_physical || e[1] < 0 || e[1] >= num_physical) {
      throw PreconditionError("coupling edge outside the device");
    }
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
  }
  for (int l = 0; l < circuit.num_qubits; ++l) {
    const int q = logical_to_physical[l];
    if (q < 0 || q >= num_physical) {
      throw PreconditionError("logical qubit " + std::to_string(l) + " placed off the device");
    }
  }

  qsim::Circuit out;
  out.num_qubits = num_physical;
  int swaps = 0;
  for (auto g : circuit.gates) {
    g.qubits[0] = logical_to_physical[g.qubits[0]];
    if (g.arity() == 1) {
      out.gates.push_back(g);
      continue;
    }
    g.qubits[1] = logical_to_physical[g.qubits[1]];
    const auto path = shortest_path(adj, g.qubits[0], g.qubits[1]);
    const int d = static_cast<int>(path.size()) - 1;
    for (int i = 0; i + 1 < d; ++i) {
      out.gates.push_back(qsim::swap(path[i], path[i + 1]));
    }
    qsim::GateOp local = g;
    local.qubits[0] = path[d - 1];
    out.gates.push_back(local);
    for (int i = d - 2; i >= 0; --i) {
      out.gates.push_back(qsim::swap(path[i], path[i + 1]));
    }
    swaps += 2 * (d - 1);
  }
  RoutedCircuit routed = count_gates(std::move(out));
  routed.swaps_inserted = swaps;
  return routed;
}

qsim::Circuit compact(const qsim::Circuit& physical, const std::vector<int>& logical_to_physical) {
  std::map<int, int> index;
  for (std::size_t l = 0; l < logical_to_physical.size(); ++l) {
    if (!index.emplace(logical_to_physical[l], static_cast<int>(l)).second) {
      throw PreconditionError("placement maps two logical qubits to one physical qubit");
    }
  }
  std::set<int> extra;
  for (const auto& g : physical.gates) {
    for (int k = 0; k < g.arity(); ++k) {
      if (!index.contains(g.qubits[k])) {
        extra.insert(g.qubits[k]);
      }
    }
  }
  int next = static_cast<int>(logical_to_physical.size());
  for (int q : extra) {
    index[q] = next++;
  }
  qsim::Circuit out;
  out.num_qubits = next;
  out.gates.reserve(physical.gates.size());
  for (auto g : physical.gates) {
    for (int k = 0; k < g.arity(); ++k) {
      g.qubits[k] = index.at(g.qubits[k]);
    }
    out.gates.push_back(g);
  }
  return out;
}

}  // namespace nvaqs::device

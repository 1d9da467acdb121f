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

#include <vector>

#include "nvaqs/device/profile.hpp"
#include "nvaqs/qsim/circuit.hpp"

namespace nvaqs::device {

struct RoutedCircuit {
  qsim::Circuit circuit;  // on physical qubit indices
  int swaps_inserted = 0;
  int cnot_count = 0;  // SWAP = 3, CU = 2, CX = 1
  int depth = 0;       // ASAP layers
};

/// BFS shortest path from `from` to `to`, both included. Neighbours are
/// explored in ascending index order, so ties go to the lowest index.
/// Throws PreconditionError when the two are disconnected.
std::vector<int> shortest_path(const std::vector<std::vector<int>>& adjacency, int from, int to);

/// Maps a logical circuit onto the device and makes every two-qubit gate
/// local: a gate at distance d walks its first qubit along the shortest path
/// with d - 1 SWAPs, acts, and walks back with d - 1 more.
RoutedCircuit route_remote_cu(const qsim::Circuit& circuit,
                              const std::vector<Edge>& coupling_map, int num_physical,
                              const std::vector<int>& logical_to_physical);

/// Counters of an arbitrary physical circuit.
RoutedCircuit count_gates(qsim::Circuit circuit);

/// Renumbers a physical circuit onto a dense register. Logical qubits keep
/// their indices; other touched physical qubits follow in ascending order.
qsim::Circuit compact(const qsim::Circuit& physical, const std::vector<int>& logical_to_physical);

}  // namespace nvaqs::device

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
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace nvaqs::device {

using Edge = std::array<int, 2>;

/// Static ZZ coupling between two physical qubits. Each gate layer adds a
/// phase kick of angle j * tau.
struct CrosstalkEntry {
  Edge pair{0, 1};
  double j = 0.0;    // rad/us, may be negative
  double tau = 0.0;  // us

  bool operator==(const CrosstalkEntry&) const = default;
};

/// Physical qubits for the electron and each (nucleus, ancilla) pair.
struct Placement {
  int electron = 0;
  std::vector<Edge> pairs;

  /// Logical -> physical map in the standard group layout.
  [[nodiscard]] std::vector<int> logical_to_physical(int num_pairs) const;

  bool operator==(const Placement&) const = default;
};

struct DeviceProfile {
  std::string name;
  int num_qubits = 0;
  std::vector<Edge> coupling_map;
  int max_pairs = 1;
  /// Whether the backend can prepare polarized nuclei.
  bool controllable = true;
  std::vector<CrosstalkEntry> crosstalk;
  /// Depolarizing probability per CX.
  double gate_error = 0.0;
  std::map<std::string, Placement> placements;
  std::string default_placement;

  /// Throws PreconditionError on dangling edges or placements, max_pairs < 1,
  /// out-of-range gate_error or non-finite crosstalk.
  void validate() const;

  [[nodiscard]] std::vector<std::vector<int>> adjacency() const;

  /// Named placement, or the default one for an empty name. Throws when it
  /// does not exist or holds fewer than `num_pairs` pairs.
  [[nodiscard]] Placement placement(std::string_view name, int num_pairs) const;

  bool operator==(const DeviceProfile&) const = default;
};

/// Greedy placement: the electron on the lowest-index vertex of highest
/// degree, nuclei in BFS order around it, each ancilla on the nearest free
/// vertex to its nucleus.
Placement auto_placement(const DeviceProfile& profile, int num_pairs);

/// 27-qubit heavy-hex (Falcon) map with the placements of the pair study.
DeviceProfile heavy_hex_27();
/// 127-qubit heavy-hex (Eagle) map.
DeviceProfile heavy_hex_127();
/// All-to-all noiseless simulator, 21 qubits, ten pairs per task.
DeviceProfile ideal_simulator();

std::vector<std::string> builtin_profile_names();
DeviceProfile builtin_profile(std::string_view name);

nlohmann::json profile_to_json(const DeviceProfile& profile);
DeviceProfile profile_from_json(const nlohmann::json& j);
DeviceProfile load_profile(const std::filesystem::path& path);
void save_profile(const std::filesystem::path& path, const DeviceProfile& profile);

/// Built-in name or path to a profile file.
DeviceProfile resolve_profile(const std::string& name_or_path);

}  // namespace nvaqs::device

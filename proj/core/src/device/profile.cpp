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

#include "nvaqs/device/profile.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <queue>
#include <set>

#include "nvaqs/common.hpp"

namespace nvaqs::device {
namespace {

void check_vertex(const DeviceProfile& p, int q, const char* what) {
  if (q < 0 || q >= p.num_qubits) {
    throw PreconditionError("profile " + p.name + ": " + what + " qubit " + std::to_string(q) +
                            " is not on the device");
  }
}

std::vector<int> bfs_order(const std::vector<std::vector<int>>& adj, int source) {
  std::vector<int> order;
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> frontier;
  frontier.push(source);
  seen[source] = true;
  while (!frontier.empty()) {
    const int v = frontier.front();
    frontier.pop();
    order.push_back(v);
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        frontier.push(w);
      }
    }
  }
  return order;
}

std::map<std::string, Placement> falcon_placements() {
  return {
      {"three_pairs", {12, {{10, 7}, {13, 14}, {15, 18}}}},
      {"left_right", {12, {{10, 7}, {13, 14}}}},
      {"top_left", {12, {{15, 18}, {10, 7}}}},
      {"top_right", {12, {{15, 18}, {13, 14}}}},
  };
}

}  // namespace

std::vector<int> Placement::logical_to_physical(int num_pairs) const {
  if (num_pairs > static_cast<int>(pairs.size())) {
    throw PreconditionError("placement holds " + std::to_string(pairs.size()) +
                            " pairs, group needs " + std::to_string(num_pairs));
  }
  std::vector<int> map{electron};
  for (int i = 0; i < num_pairs; ++i) {
    map.push_back(pairs[i][0]);
    map.push_back(pairs[i][1]);
  }
  return map;
}

void DeviceProfile::validate() const {
  if (name.empty()) {
    throw PreconditionError("profile needs a name");
  }
  if (num_qubits < 1) {
    throw PreconditionError("profile " + name + ": num_qubits must be positive");
  }
  if (max_pairs < 1) {
    throw PreconditionError("profile " + name + ": max_pairs must be at least 1");
  }
  if (!(gate_error >= 0.0 && gate_error <= 1.0)) {
    throw PreconditionError("profile " + name + ": gate_error must lie in [0, 1]");
  }
  for (const auto& e : coupling_map) {
    check_vertex(*this, e[0], "coupling");
    check_vertex(*this, e[1], "coupling");
    if (e[0] == e[1]) {
      throw PreconditionError("profile " + name + ": self loop in coupling map");
    }
  }
  for (const auto& c : crosstalk) {
    check_vertex(*this, c.pair[0], "crosstalk");
    check_vertex(*this, c.pair[1], "crosstalk");
    if (c.pair[0] == c.pair[1] || !std::isfinite(c.j) || !(c.tau >= 0.0) ||
        !std::isfinite(c.tau)) {
      throw PreconditionError("profile " + name + ": invalid crosstalk entry");
    }
  }
  for (const auto& [label, pl] : placements) {
    std::set<int> used{pl.electron};
    check_vertex(*this, pl.electron, "placement");
    for (const auto& pair : pl.pairs) {
      for (int q : pair) {
        check_vertex(*this, q, "placement");
        if (!used.insert(q).second) {
          throw PreconditionError("profile " + name + ": placement " + label +
                                  " reuses qubit " + std::to_string(q));
        }
      }
    }
  }
  if (!default_placement.empty() && !placements.contains(default_placement)) {
    throw PreconditionError("profile " + name + ": unknown default placement " +
                            default_placement);
  }
}

std::vector<std::vector<int>> DeviceProfile::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(std::max(num_qubits, 0)));
  for (const auto& e : coupling_map) {
    adj[e[0]].push_back(e[1]);
    adj[e[1]].push_back(e[0]);
  }
  for (auto& n : adj) {
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
  }
  return adj;
}

Placement DeviceProfile::placement(std::string_view label, int num_pairs) const {
  const std::string key(label.empty() ? std::string_view(default_placement) : label);
  if (key.empty() || key == "auto") {
    return auto_placement(*this, num_pairs);
  }
  const auto it = placements.find(key);
  if (it == placements.end()) {
    throw PreconditionError("profile " + name + " has no placement named " + key);
  }
  (void)it->second.logical_to_physical(num_pairs);
  return it->second;
}

Placement auto_placement(const DeviceProfile& profile, int num_pairs) {
  if (num_pairs < 1) {
    throw PreconditionError("placement needs at least one pair");
  }
  if (2 * num_pairs + 1 > profile.num_qubits) {
    throw CapacityError("profile " + profile.name + " cannot host " + std::to_string(num_pairs) +
                        " pairs");
  }
  const auto adj = profile.adjacency();
  int electron = 0;
  for (int v = 0; v < profile.num_qubits; ++v) {
    if (adj[v].size() > adj[electron].size()) {
      electron = v;
    }
  }
  std::vector<bool> used(adj.size(), false);
  used[electron] = true;
  Placement placement{electron, {}};
  for (int v : bfs_order(adj, electron)) {
    if (static_cast<int>(placement.pairs.size()) == num_pairs) {
      break;
    }
    if (used[v]) {
      continue;
    }
    int ancilla = -1;
    for (int w : bfs_order(adj, v)) {
      if (w != v && !used[w]) {
        ancilla = w;
        break;
      }
    }
    if (ancilla < 0) {
      break;
    }
    used[v] = true;
    used[ancilla] = true;
    placement.pairs.push_back({v, ancilla});
  }
  if (static_cast<int>(placement.pairs.size()) < num_pairs) {
    throw CapacityError("profile " + profile.name + ": connected component too small for " +
                        std::to_string(num_pairs) + " pairs");
  }
  return placement;
}

DeviceProfile heavy_hex_27() {
  DeviceProfile p;
  p.name = "heavy_hex_27";
  p.num_qubits = 27;
  p.coupling_map = {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
                    {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
                    {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
                    {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
  p.max_pairs = 3;
  p.controllable = true;
  p.crosstalk = {{{12, 18}, 0.2, 0.1}};
  p.placements = falcon_placements();
  p.default_placement = "three_pairs";
  return p;
}

DeviceProfile heavy_hex_127() {
  DeviceProfile p;
  p.name = "heavy_hex_127";
  p.num_qubits = 127;
  // Seven rows of data qubits joined by four bridge qubits between rows.
  const std::array<std::array<int, 2>, 7> rows{{{0, 13}, {18, 32}, {37, 51}, {56, 70},
                                                 {75, 89}, {94, 108}, {113, 126}}};
  for (const auto& [first, last] : rows) {
    for (int q = first; q < last; ++q) {
      p.coupling_map.push_back({q, q + 1});
    }
  }
  const std::array<std::array<int, 3>, 24> bridges{{
      {14, 0, 18},   {15, 4, 22},   {16, 8, 26},    {17, 12, 30},   {33, 20, 39},
      {34, 24, 43},  {35, 28, 47},  {36, 32, 51},   {52, 37, 56},   {53, 41, 60},
      {54, 45, 64},  {55, 49, 68},  {71, 58, 77},   {72, 62, 81},   {73, 66, 85},
      {74, 70, 89},  {90, 75, 94},  {91, 79, 98},   {92, 83, 102},  {93, 87, 106},
      {109, 96, 114}, {110, 100, 118}, {111, 104, 122}, {112, 108, 126},
  }};
  for (const auto& [bridge, above, below] : bridges) {
    p.coupling_map.push_back({above, bridge});
    p.coupling_map.push_back({bridge, below});
  }
  std::sort(p.coupling_map.begin(), p.coupling_map.end());
  p.max_pairs = 3;
  p.controllable = true;
  p.default_placement = "";
  return p;
}

DeviceProfile ideal_simulator() {
  DeviceProfile p;
  p.name = "ideal_simulator";
  p.num_qubits = 21;
  for (int a = 0; a < p.num_qubits; ++a) {
    for (int b = a + 1; b < p.num_qubits; ++b) {
      p.coupling_map.push_back({a, b});
    }
  }
  p.max_pairs = 10;
  p.controllable = true;
  Placement identity{0, {}};
  for (int i = 0; i < p.max_pairs; ++i) {
    identity.pairs.push_back({2 * i + 1, 2 * i + 2});
  }
  p.placements["standard"] = identity;
  p.default_placement = "standard";
  return p;
}

std::vector<std::string> builtin_profile_names() {
  return {"heavy_hex_27", "heavy_hex_127", "ideal_simulator"};
}

DeviceProfile builtin_profile(std::string_view name) {
  if (name == "heavy_hex_27") {
    return heavy_hex_27();
  }
  if (name == "heavy_hex_127") {
    return heavy_hex_127();
  }
  if (name == "ideal_simulator") {
    return ideal_simulator();
  }
  std::string known;
  for (const auto& n : builtin_profile_names()) {
    known += " " + n;
  }
  throw PreconditionError("unknown profile '" + std::string(name) + "'; built-in:" + known);
}

nlohmann::json profile_to_json(const DeviceProfile& profile) {
  nlohmann::json j;
  j["name"] = profile.name;
  j["num_qubits"] = profile.num_qubits;
  j["coupling_map"] = profile.coupling_map;
  j["max_pairs"] = profile.max_pairs;
  j["controllable"] = profile.controllable;
  j["gate_error"] = profile.gate_error;
  j["crosstalk"] = nlohmann::json::array();
  for (const auto& c : profile.crosstalk) {
    j["crosstalk"].push_back({{"pair", c.pair}, {"J", c.j}, {"tau", c.tau}});
  }
  j["placements"] = nlohmann::json::object();
  for (const auto& [label, pl] : profile.placements) {
    j["placements"][label] = {{"electron", pl.electron}, {"pairs", pl.pairs}};
  }
  j["default_placement"] = profile.default_placement;
  return j;
}

DeviceProfile profile_from_json(const nlohmann::json& j) {
  DeviceProfile p;
  try {
    p.name = j.at("name").get<std::string>();
    p.coupling_map = j.at("coupling_map").get<std::vector<Edge>>();
    p.max_pairs = j.at("max_pairs").get<int>();
    if (j.contains("num_qubits")) {
      p.num_qubits = j.at("num_qubits").get<int>();
    } else {
      for (const auto& e : p.coupling_map) {
        p.num_qubits = std::max({p.num_qubits, e[0] + 1, e[1] + 1});
      }
    }
    p.controllable = j.value("controllable", true);
    p.gate_error = j.value("gate_error", 0.0);
    if (j.contains("crosstalk")) {
      for (const auto& c : j.at("crosstalk")) {
        p.crosstalk.push_back(
            {c.at("pair").get<Edge>(), c.at("J").get<double>(), c.at("tau").get<double>()});
      }
    }
    if (j.contains("placements")) {
      for (const auto& [label, pl] : j.at("placements").items()) {
        p.placements[label] = {pl.at("electron").get<int>(), pl.at("pairs").get<std::vector<Edge>>()};
      }
    }
    p.default_placement = j.value("default_placement", std::string());
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed profile: ") + e.what());
  }
  p.validate();
  return p;
}

DeviceProfile load_profile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open profile " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse profile " + path.string() + ": " + e.what());
  }
  return profile_from_json(j);
}

void save_profile(const std::filesystem::path& path, const DeviceProfile& profile) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << profile_to_json(profile).dump(2) << '\n';
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

DeviceProfile resolve_profile(const std::string& name_or_path) {
  const auto names = builtin_profile_names();
  if (std::find(names.begin(), names.end(), name_or_path) != names.end()) {
    return builtin_profile(name_or_path);
  }
  if (std::filesystem::exists(name_or_path)) {
    return load_profile(name_or_path);
  }
  return builtin_profile(name_or_path);
}

}  // namespace nvaqs::device

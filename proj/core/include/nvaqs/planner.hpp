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

#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/device/profile.hpp"
#include "nvaqs/series.hpp"

namespace nvaqs::planner {

struct PlannedGroup {
  std::vector<int> nuclei;  // bath indices, ascending distance
  std::string profile;
  int qubits = 0;           // 1 + 2 * nuclei.size()
  bool controllable = true;

  bool operator==(const PlannedGroup&) const = default;
};

struct PartitionPlan {
  std::vector<PlannedGroup> groups;

  /// Throws PreconditionError unless the groups partition [0, bath_size)
  /// and every polarized nucleus sits in a controllable group.
  void validate(const bathgen::BathConfiguration& bath) const;

  bool operator==(const PartitionPlan&) const = default;
};

/// Packs nuclei inside the polarization radius, in distance order, into
/// groups of device.max_pairs; the rest into groups of simulator.max_pairs.
PartitionPlan partition_bath(const bathgen::BathConfiguration& bath,
                             const device::DeviceProfile& device,
                             const device::DeviceProfile& simulator);

/// Contiguous packing of all nuclei into groups of at most `size`, on one profile.
PartitionPlan pack_uniform(const bathgen::BathConfiguration& bath, int size,
                           const device::DeviceProfile& profile);

/// Sites of one group, in group order.
std::vector<bathgen::NuclearSite> group_sites(const bathgen::BathConfiguration& bath,
                                              const PlannedGroup& group);

/// Pointwise product of series on one shared grid. An empty list yields
/// nothing to combine and is an error; grids must match exactly.
DephasingSeries combine_groups(std::span<const DephasingSeries> series);

nlohmann::json plan_to_json(const PartitionPlan& plan);
PartitionPlan plan_from_json(const nlohmann::json& j);

}  // namespace nvaqs::planner

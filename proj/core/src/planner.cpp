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

#include "nvaqs/planner.hpp"

#include <algorithm>
#include <string>

#include "nvaqs/common.hpp"

namespace nvaqs::planner {
namespace {

void pack(std::vector<PlannedGroup>& out, int begin, int end, const device::DeviceProfile& p,
          int size) {
  for (int start = begin; start < end; start += size) {
    PlannedGroup g;
    for (int k = start; k < std::min(end, start + size); ++k) {
      g.nuclei.push_back(k);
    }
    g.profile = p.name;
    g.qubits = 1 + 2 * static_cast<int>(g.nuclei.size());
    g.controllable = p.controllable;
    out.push_back(std::move(g));
  }
}

}  // namespace

void PartitionPlan::validate(const bathgen::BathConfiguration& bath) const {
  const auto n = bath.sites.size();
  std::vector<bool> seen(n, false);
  for (const auto& g : groups) {
    if (g.nuclei.empty()) {
      throw PreconditionError("plan contains an empty group");
    }
    if (g.qubits != 1 + 2 * static_cast<int>(g.nuclei.size())) {
      throw PreconditionError("plan group qubit count disagrees with its size");
    }
    for (int k : g.nuclei) {
      if (k < 0 || static_cast<std::size_t>(k) >= n) {
        throw PreconditionError("plan references nucleus " + std::to_string(k) +
                                " outside the bath");
      }
      if (seen[k]) {
        throw PreconditionError("nucleus " + std::to_string(k) + " appears in two groups");
      }
      seen[k] = true;
      if (!g.controllable && bath.sites[k].polarization.norm() > 0.0) {
        throw PreconditionError("polarized nucleus " + std::to_string(k) +
                                " assigned to a non-controllable profile");
      }
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw PreconditionError("plan does not cover every nucleus");
  }
}

PartitionPlan partition_bath(const bathgen::BathConfiguration& bath,
                             const device::DeviceProfile& device,
                             const device::DeviceProfile& simulator) {
  if (device.max_pairs < 1 || simulator.max_pairs < 1) {
    throw PreconditionError("max_pairs must be at least 1");
  }
  for (std::size_t i = 1; i < bath.sites.size(); ++i) {
    if (bath.sites[i].distance < bath.sites[i - 1].distance) {
      throw PreconditionError("bath is not sorted by distance");
    }
  }
  const int n = static_cast<int>(bath.sites.size());
  const int inner = bath.inner_count();
  PartitionPlan plan;
  pack(plan.groups, 0, inner, device, device.max_pairs);
  pack(plan.groups, inner, n, simulator, simulator.max_pairs);
  plan.validate(bath);
  return plan;
}

PartitionPlan pack_uniform(const bathgen::BathConfiguration& bath, int size,
                           const device::DeviceProfile& profile) {
  if (size < 1) {
    throw PreconditionError("group size must be at least 1");
  }
  PartitionPlan plan;
  pack(plan.groups, 0, static_cast<int>(bath.sites.size()), profile, size);
  plan.validate(bath);
  return plan;
}

std::vector<bathgen::NuclearSite> group_sites(const bathgen::BathConfiguration& bath,
                                              const PlannedGroup& group) {
  std::vector<bathgen::NuclearSite> sites;
  sites.reserve(group.nuclei.size());
  for (int k : group.nuclei) {
    sites.push_back(bath.sites.at(static_cast<std::size_t>(k)));
  }
  return sites;
}

DephasingSeries combine_groups(std::span<const DephasingSeries> series) {
  if (series.empty()) {
    throw PreconditionError("no series to combine");
  }
  DephasingSeries out = series.front();
  out.validate();
  std::string groups = out.metadata.group;
  for (std::size_t s = 1; s < series.size(); ++s) {
    const auto& next = series[s];
    if (next.times != out.times) {
      throw PreconditionError("series '" + next.metadata.group +
                              "' is on a different time grid; combination needs identical grids");
    }
    for (std::size_t i = 0; i < out.values.size(); ++i) {
      out.values[i] *= next.values[i];
    }
    groups += "+" + next.metadata.group;
    if (next.metadata.backend != out.metadata.backend) {
      out.metadata.backend = "mixed";
    }
  }
  out.metadata.group = groups;
  return out;
}

nlohmann::json plan_to_json(const PartitionPlan& plan) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : plan.groups) {
    groups.push_back({{"nuclei", g.nuclei},
                      {"profile", g.profile},
                      {"qubits", g.qubits},
                      {"controllable", g.controllable}});
  }
  return {{"groups", groups}};
}

PartitionPlan plan_from_json(const nlohmann::json& j) {
  PartitionPlan plan;
  try {
    for (const auto& g : j.at("groups")) {
      PlannedGroup group;
      group.nuclei = g.at("nuclei").get<std::vector<int>>();
      group.profile = g.at("profile").get<std::string>();
      group.qubits = g.at("qubits").get<int>();
      group.controllable = g.value("controllable", true);
      plan.groups.push_back(std::move(group));
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed plan: ") + e.what());
  }
  return plan;
}

}  // namespace nvaqs::planner

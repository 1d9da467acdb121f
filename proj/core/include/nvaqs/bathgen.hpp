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

#include <cstdint>
#include <span>
#include <vector>

#include "nvaqs/common.hpp"

/// Diamond-lattice 13C bath generation.
///
/// Coordinates are in nm in the NV frame: the vacancy sits at the origin and
/// the crystal [111] axis (vacancy -> nitrogen) is rotated onto +z by
/// `nv_frame_rotation()`.
namespace nvaqs::bathgen {

inline constexpr std::uint64_t kDefaultSeed = 2;

/// Region radius whose candidate count matches target_count / abundance.
double matched_region_radius(double lattice_constant, double exclusion_radius, double abundance,
                             int target_count);

struct LatticeSpec {
  double lattice_constant = 0.357;  // nm
  double exclusion_radius = 0.5;    // nm
  double polarization_radius = 1.0; // nm
  double abundance = 0.011;
  int target_count = 520;
  double region_radius = matched_region_radius(0.357, 0.5, 0.011, 520);  // nm
  std::uint64_t seed = kDefaultSeed;

  /// Throws PreconditionError unless
  /// exclusion < polarization < region, 0 < abundance < 1, target_count >= 1.
  void validate() const;

  bool operator==(const LatticeSpec&) const = default;
};

struct NuclearSite {
  int index = 0;  // position in distance order
  Vec3 position = Vec3::Zero();
  double distance = 0.0;
  Vec3 polarization = Vec3::Zero();
};

struct BathConfiguration {
  LatticeSpec spec;
  std::vector<NuclearSite> sites;

  /// Number of sites strictly inside the polarization radius.
  [[nodiscard]] int inner_count() const;
};

/// Rotation taking the unit [111] crystal direction onto +z. Built with
/// Rodrigues' formula about the axis [1,-1,0]/sqrt(2).
Eigen::Matrix3d nv_frame_rotation();

/// All diamond-cubic sites with exclusion_radius <= |r| <= region_radius,
/// in NV-frame coordinates, sorted by distance (ties by coordinates).
std::vector<Vec3> generate_lattice_sites(const LatticeSpec& spec);

/// Draws exactly spec.target_count distinct sites without replacement.
/// Output is sorted by distance and indexed in that order, all unpolarized.
BathConfiguration sample_bath(std::span<const Vec3> candidates, const LatticeSpec& spec);

/// generate_lattice_sites + sample_bath.
BathConfiguration generate_bath(const LatticeSpec& spec);

/// Sites with |r| < polarization_radius get `inner`; every other site is zeroed.
BathConfiguration assign_polarizations(BathConfiguration bath, const Vec3& inner);

}  // namespace nvaqs::bathgen

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

#include "nvaqs/bathgen.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>
#include <sstream>

#include <Eigen/Geometry>

#include "nvaqs/rng.hpp"

namespace nvaqs::bathgen {
namespace {

// Conventional cubic cell in units of a/4: FCC basis plus the (1,1,1)/4 shift.
constexpr int kBasis[8][3] = {{0, 0, 0}, {0, 2, 2}, {2, 0, 2}, {2, 2, 0},
                              {1, 1, 1}, {1, 3, 3}, {3, 1, 3}, {3, 3, 1}};

bool distance_less(const Vec3& a, const Vec3& b) {
  const double da = a.squaredNorm();
  const double db = b.squaredNorm();
  if (da != db) {
    return da < db;
  }
  return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
}

}  // namespace

double matched_region_radius(double lattice_constant, double exclusion_radius, double abundance,
                             int target_count) {
  const double density = 8.0 / std::pow(lattice_constant, 3);
  const double candidates = static_cast<double>(target_count) / abundance;
  return std::cbrt(3.0 * candidates / (4.0 * kPi * density) + std::pow(exclusion_radius, 3));
}

void LatticeSpec::validate() const {
  if (!(lattice_constant > 0.0)) {
    throw PreconditionError("lattice_constant must be positive");
  }
  if (!(exclusion_radius < polarization_radius && polarization_radius < region_radius)) {
    std::ostringstream msg;
    msg << "radii must satisfy exclusion < polarization < region (got " << exclusion_radius << ", "
        << polarization_radius << ", " << region_radius << ")";
    throw PreconditionError(msg.str());
  }
  if (!(abundance > 0.0 && abundance < 1.0)) {
    throw PreconditionError("abundance must lie in (0, 1)");
  }
  if (target_count < 1) {
    throw PreconditionError("target_count must be >= 1");
  }
}

int BathConfiguration::inner_count() const {
  return static_cast<int>(std::count_if(sites.begin(), sites.end(), [&](const NuclearSite& s) {
    return s.distance < spec.polarization_radius;
  }));
}

Eigen::Matrix3d nv_frame_rotation() {
  const Vec3 from = Vec3(1.0, 1.0, 1.0).normalized();
  const Vec3 to(0.0, 0.0, 1.0);
  const Vec3 axis = from.cross(to).normalized();
  const double cos_a = from.dot(to);
  const double sin_a = from.cross(to).norm();
  Eigen::Matrix3d k;
  k << 0.0, -axis.z(), axis.y(), axis.z(), 0.0, -axis.x(), -axis.y(), axis.x(), 0.0;
  return Eigen::Matrix3d::Identity() + sin_a * k + (1.0 - cos_a) * k * k;
}

std::vector<Vec3> generate_lattice_sites(const LatticeSpec& spec) {
  spec.validate();
  const double quarter = spec.lattice_constant / 4.0;
  const int cells = static_cast<int>(std::ceil(spec.region_radius / spec.lattice_constant)) + 1;
  const double r_min2 = spec.exclusion_radius * spec.exclusion_radius;
  const double r_max2 = spec.region_radius * spec.region_radius;
  const Eigen::Matrix3d rot = nv_frame_rotation();

  std::vector<Vec3> sites;
  for (int i = -cells; i <= cells; ++i) {
    for (int j = -cells; j <= cells; ++j) {
      for (int k = -cells; k <= cells; ++k) {
        for (const auto& b : kBasis) {
          const Vec3 crystal(quarter * (4 * i + b[0]), quarter * (4 * j + b[1]),
                             quarter * (4 * k + b[2]));
          const double d2 = crystal.squaredNorm();
          if (d2 >= r_min2 && d2 <= r_max2) {
            sites.push_back(rot * crystal);
          }
        }
      }
    }
  }
  std::sort(sites.begin(), sites.end(), distance_less);
  if (static_cast<int>(sites.size()) < spec.target_count) {
    std::ostringstream msg;
    msg << "region of radius " << spec.region_radius << " nm holds " << sites.size()
        << " lattice sites, fewer than target_count = " << spec.target_count;
    throw CapacityError(msg.str());
  }
  return sites;
}

BathConfiguration sample_bath(std::span<const Vec3> candidates, const LatticeSpec& spec) {
  spec.validate();
  const auto n = candidates.size();
  const auto want = static_cast<std::size_t>(spec.target_count);
  if (n < want) {
    throw CapacityError("insufficient candidate sites: have " + std::to_string(n) + ", need " +
                        std::to_string(want));
  }
  const double fraction = static_cast<double>(want) / static_cast<double>(n);
  if (fraction > 2.0 * spec.abundance || fraction < 0.5 * spec.abundance) {
    std::cerr << "warning: sampled fraction " << fraction << " is not within a factor of 2 of abundance "
              << spec.abundance << "; adjust region_radius\n";
  }

  // Partial Fisher-Yates over candidate indices.
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(spec.seed);
  for (std::size_t i = 0; i < want; ++i) {
    const std::size_t j = i + uniform_index(rng, n - i);
    std::swap(order[i], order[j]);
  }
  std::vector<Vec3> chosen;
  chosen.reserve(want);
  for (std::size_t i = 0; i < want; ++i) {
    chosen.push_back(candidates[order[i]]);
  }
  std::sort(chosen.begin(), chosen.end(), distance_less);

  BathConfiguration bath{spec, {}};
  bath.sites.reserve(want);
  for (std::size_t i = 0; i < want; ++i) {
    bath.sites.push_back(NuclearSite{static_cast<int>(i), chosen[i], chosen[i].norm(), Vec3::Zero()});
  }
  return bath;
}

BathConfiguration generate_bath(const LatticeSpec& spec) {
  const auto sites = generate_lattice_sites(spec);
  return sample_bath(sites, spec);
}

BathConfiguration assign_polarizations(BathConfiguration bath, const Vec3& inner) {
  if (!(inner.norm() <= 1.0 + 1e-12)) {
    throw PreconditionError("polarization must be a Bloch vector with |p| <= 1");
  }
  for (auto& site : bath.sites) {
    site.polarization = site.distance < bath.spec.polarization_radius ? inner : Vec3::Zero();
  }
  return bath;
}

}  // namespace nvaqs::bathgen

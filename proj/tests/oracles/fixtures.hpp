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

// Random inputs shared by unit and acceptance tests.

#include <cmath>
#include <random>
#include <vector>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/qsim/aqs.hpp"

namespace fixture {

using nvaqs::Vec3;

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Vec3 random_direction(std::mt19937_64& rng) {
  const double z = uniform(rng, -1.0, 1.0);
  const double phi = uniform(rng, 0.0, 2.0 * M_PI);
  const double s = std::sqrt(1.0 - z * z);
  return {s * std::cos(phi), s * std::sin(phi), z};
}

// A polarization from one of the five oracle families, angles drawn uniformly.
inline Vec3 random_family_polarization(std::mt19937_64& rng) {
  using nvaqs::qsim::PolarizationFamily;
  using nvaqs::qsim::PolarizationOracle;
  const int family = static_cast<int>(rng() % 5);
  const double t1 = uniform(rng, 0.0, M_PI);
  const double t2 = uniform(rng, -M_PI, M_PI);
  switch (family) {
    case 0:
      return {0, 0, 1};
    case 1:
      return {1, 0, 0};
    case 2:
      return Vec3::Zero();
    case 3:
      return PolarizationOracle{PolarizationFamily::kZTheta, t1, 0}.bloch_vector();
    default:
      return PolarizationOracle{PolarizationFamily::kXZ, t1, t2}.bloch_vector();
  }
}

inline std::vector<nvaqs::bathgen::NuclearSite> random_sites(std::mt19937_64& rng, int n,
                                                             bool polarized = true) {
  std::vector<nvaqs::bathgen::NuclearSite> sites;
  for (int k = 0; k < n; ++k) {
    const Vec3 r = uniform(rng, 0.5, 3.0) * random_direction(rng);
    sites.push_back({k, r, r.norm(), polarized ? random_family_polarization(rng) : Vec3::Zero()});
  }
  return sites;
}

inline nvaqs::physics::PrecessionSpec random_spec(std::mt19937_64& rng) {
  const Vec3 a = uniform(rng, 0.0, 3.0) * random_direction(rng);
  return nvaqs::physics::precession_spec(a, uniform(rng, 0.0, 300.0),
                                         nvaqs::physics::PhysicalConstants::standard());
}

}  // namespace fixture

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

#include "nvaqs/io.hpp"

#include <array>
#include <fstream>
#include <string>

#include "nvaqs/common.hpp"

namespace nvaqs::io {
namespace {

nlohmann::json vec_to_json(const Vec3& v) { return {v.x(), v.y(), v.z()}; }

Vec3 vec_from_json(const nlohmann::json& j) {
  const auto a = j.get<std::array<double, 3>>();
  return {a[0], a[1], a[2]};
}

}  // namespace

nlohmann::json lattice_spec_to_json(const bathgen::LatticeSpec& spec) {
  return {{"lattice_constant", spec.lattice_constant},
          {"region_radius", spec.region_radius},
          {"exclusion_radius", spec.exclusion_radius},
          {"polarization_radius", spec.polarization_radius},
          {"abundance", spec.abundance},
          {"target_count", spec.target_count},
          {"seed", spec.seed}};
}

bathgen::LatticeSpec lattice_spec_from_json(const nlohmann::json& j,
                                            const bathgen::LatticeSpec& base) {
  bathgen::LatticeSpec spec = base;
  try {
    spec.lattice_constant = j.value("lattice_constant", spec.lattice_constant);
    spec.exclusion_radius = j.value("exclusion_radius", spec.exclusion_radius);
    spec.polarization_radius = j.value("polarization_radius", spec.polarization_radius);
    spec.abundance = j.value("abundance", spec.abundance);
    spec.target_count = j.value("target_count", spec.target_count);
    spec.seed = j.value("seed", spec.seed);
    if (j.contains("region_radius")) {
      spec.region_radius = j.at("region_radius").get<double>();
    } else if (j.contains("lattice_constant") || j.contains("exclusion_radius") ||
               j.contains("abundance") || j.contains("target_count")) {
      spec.region_radius = bathgen::matched_region_radius(
          spec.lattice_constant, spec.exclusion_radius, spec.abundance, spec.target_count);
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed lattice spec: ") + e.what());
  }
  return spec;
}

nlohmann::json bath_to_json(const bathgen::BathConfiguration& bath) {
  nlohmann::json sites = nlohmann::json::array();
  for (const auto& s : bath.sites) {
    sites.push_back({{"k", s.index}, {"r", vec_to_json(s.position)}, {"p", vec_to_json(s.polarization)}});
  }
  return {{"spec", lattice_spec_to_json(bath.spec)}, {"sites", sites}};
}

bathgen::BathConfiguration bath_from_json(const nlohmann::json& j) {
  bathgen::BathConfiguration bath;
  try {
    bath.spec = lattice_spec_from_json(j.at("spec"));
    for (const auto& s : j.at("sites")) {
      bathgen::NuclearSite site;
      site.index = s.at("k").get<int>();
      site.position = vec_from_json(s.at("r"));
      site.distance = site.position.norm();
      site.polarization = s.contains("p") ? vec_from_json(s.at("p")) : Vec3::Zero();
      bath.sites.push_back(site);
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed bath: ") + e.what());
  }
  for (std::size_t i = 0; i < bath.sites.size(); ++i) {
    const auto& s = bath.sites[i];
    if (s.index != static_cast<int>(i)) {
      throw IoError("bath sites must be indexed 0..n-1 in order");
    }
    if (i > 0 && s.distance < bath.sites[i - 1].distance) {
      throw IoError("bath sites are not sorted by distance");
    }
    if (s.distance < bath.spec.exclusion_radius) {
      throw IoError("bath site " + std::to_string(i) + " lies inside the exclusion radius");
    }
    if (s.polarization.norm() > 1.0 + 1e-12) {
      throw IoError("bath site " + std::to_string(i) + " has |p| > 1");
    }
  }
  return bath;
}

nlohmann::json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot open " + path.string());
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j) {
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw IoError("cannot create " + path.parent_path().string() + ": " + ec.message());
    }
  }
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot open " + path.string() + " for writing");
  }
  out << j.dump(2) << '\n';
  if (!out) {
    throw IoError("failed writing " + path.string());
  }
}

bathgen::BathConfiguration load_bath(const std::filesystem::path& path) {
  return bath_from_json(read_json(path));
}

void save_bath(const std::filesystem::path& path, const bathgen::BathConfiguration& bath) {
  write_json(path, bath_to_json(bath));
}

}  // namespace nvaqs::io

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

#include <filesystem>

#include <nlohmann/json.hpp>

#include "nvaqs/bathgen.hpp"

namespace nvaqs::io {

nlohmann::json lattice_spec_to_json(const bathgen::LatticeSpec& spec);
/// Missing keys keep the values of `base`.
bathgen::LatticeSpec lattice_spec_from_json(const nlohmann::json& j,
                                            const bathgen::LatticeSpec& base = {});

/// {"spec": {...}, "sites": [{"k": int, "r": [x, y, z], "p": [px, py, pz]}, ...]}
nlohmann::json bath_to_json(const bathgen::BathConfiguration& bath);
bathgen::BathConfiguration bath_from_json(const nlohmann::json& j);

nlohmann::json read_json(const std::filesystem::path& path);
/// Creates missing parent directories.
void write_json(const std::filesystem::path& path, const nlohmann::json& j);

bathgen::BathConfiguration load_bath(const std::filesystem::path& path);
void save_bath(const std::filesystem::path& path, const bathgen::BathConfiguration& bath);

}  // namespace nvaqs::io

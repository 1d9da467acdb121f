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
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/device/profile.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/planner.hpp"
#include "nvaqs/series.hpp"
#include "nvaqs/spectral.hpp"

/// End-to-end driver: bath -> partition -> per-group backends -> product.
namespace nvaqs::pipeline {

enum class Backend { kAnalytic, kExactCircuit, kShots, kNoisy };

std::string_view backend_name(Backend backend);
Backend parse_backend(std::string_view name);

/// Inner-nucleus polarization from a CLI token:
/// none | z | x | ztheta:t | xz:t1,t2 (angles in radians).
Vec3 parse_polarization(std::string_view token);

struct RunConfig {
  bathgen::LatticeSpec lattice;
  std::optional<std::filesystem::path> bath_file;
  std::vector<double> bz_gauss{100.0};
  std::string polarization = "none";
  Backend device_backend = Backend::kAnalytic;
  Backend simulator_backend = Backend::kAnalytic;
  std::string device_profile = "heavy_hex_27";
  std::string simulator_profile = "ideal_simulator";
  std::string placement;  // empty: the profile default
  std::int64_t shots = 4096;
  int trajectories = 64;
  double t_max = 20.0;  // us
  int t_steps = 401;    // grid points including t = 0
  int num_freqs = spectral::kDefaultNumFreqs;
  double window_sigma = 0.0;  // us; 0 disables the window
  std::filesystem::path out_dir = "out";
  int jobs = 0;  // 0: all cores

  /// Throws PreconditionError on an invalid field.
  void validate() const;
  [[nodiscard]] std::vector<double> time_grid() const;
  [[nodiscard]] spectral::Window window() const;
};

nlohmann::json config_to_json(const RunConfig& config);
/// Keys absent from `j` keep the values of `base`.
RunConfig config_from_json(const nlohmann::json& j, const RunConfig& base = {});

/// Generated or loaded bath with the configured inner polarization applied.
bathgen::BathConfiguration prepare_bath(const RunConfig& config);

struct ExecutionSettings {
  std::map<std::string, device::DeviceProfile> profiles;
  std::map<std::string, Backend> backends;  // per profile name
  std::string placement;
  std::int64_t shots = 4096;
  int trajectories = 64;
  std::uint64_t seed = 0;
  int jobs = 0;
  physics::PhysicalConstants constants = physics::PhysicalConstants::standard();
};

/// Settings for the device/simulator pair named in `config`.
ExecutionSettings settings_from_config(const RunConfig& config);

/// Series of one planned group; `group_index` labels it and derives its seed.
DephasingSeries run_planned_group(const bathgen::BathConfiguration& bath,
                                  const planner::PlannedGroup& group, std::size_t group_index,
                                  double bz_gauss, const std::vector<double>& times,
                                  const ExecutionSettings& settings);

struct RunResult {
  planner::PartitionPlan plan;
  std::vector<DephasingSeries> groups;
  DephasingSeries combined;
};

/// Runs every group of `plan` and multiplies the results. Any failing group
/// aborts the whole run.
RunResult run_plan(const bathgen::BathConfiguration& bath, const planner::PartitionPlan& plan,
                   double bz_gauss, const std::vector<double>& times,
                   const ExecutionSettings& settings);

/// Largest precession frequency among the bath and the field list, for the
/// CHER bandwidth check.
double required_bandwidth(const bathgen::BathConfiguration& bath, double bz_gauss);

/// Canned scenario outputs.
struct FigureSeries {
  std::string label;  // e.g. "fig7_bz200" or "fig8_top_right_prototype_bz100"
  DephasingSeries series;
  std::optional<spectral::CherResult> cher;
};

std::vector<std::string> figure_names();

/// fig5 unpolarized, fig6 z-polarized inner shell, fig7 x-polarized inner
/// shell, each analytic at every configured field; fig8 compares the pair
/// placements of the device profile under the noisy backend, both for the
/// two innermost nuclei alone and combined with the rest of the bath.
std::vector<FigureSeries> run_figure(std::string_view name, const RunConfig& config);

/// Placements compared by fig8.
std::vector<std::string> crosstalk_placements();

}  // namespace nvaqs::pipeline

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
#include <optional>
#include <string>
#include <vector>

#include "nvaqs/pipeline.hpp"

namespace nvaqs::cli {

/// Flags shared by the subcommands; unset optionals leave the config alone.
struct Overrides {
  std::optional<std::filesystem::path> config_file;
  std::optional<std::filesystem::path> bath_file;
  std::optional<std::uint64_t> seed;
  std::vector<double> bz;
  std::optional<std::string> polarization;
  std::optional<std::string> backend;
  std::optional<std::string> sim_backend;
  std::optional<std::string> profile;
  std::optional<std::string> sim_profile;
  std::optional<std::string> placement;
  std::optional<std::int64_t> shots;
  std::optional<int> trajectories;
  std::optional<double> t_max;
  std::optional<int> t_steps;
  std::optional<int> num_freqs;
  std::optional<double> window_sigma;
  std::optional<std::filesystem::path> out_dir;
  std::optional<int> jobs;
};

/// `base`, then the config file (a manifest's "config" block also works),
/// then explicit flags.
pipeline::RunConfig resolve_config(const Overrides& o, pipeline::RunConfig base = {});

int cmd_bath(const pipeline::RunConfig& config);
int cmd_plan(const pipeline::RunConfig& config);
int cmd_run(const pipeline::RunConfig& config);
int cmd_cher(const std::filesystem::path& input, const std::filesystem::path& output,
             const pipeline::RunConfig& config, double bandwidth);
int cmd_figure(const std::string& name, const pipeline::RunConfig& config, bool gnuplot);

}  // namespace nvaqs::cli

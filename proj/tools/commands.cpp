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

#include "commands.hpp"

#include <fstream>
#include <iostream>

#include <nlohmann/json.hpp>

#include "nvaqs/device/profile.hpp"
#include "nvaqs/io.hpp"
#include "nvaqs/planner.hpp"
#include "nvaqs/spectral.hpp"

namespace nvaqs::cli {
namespace {

namespace fs = std::filesystem;

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    throw IoError("cannot create " + dir.string() + ": " + ec.message());
  }
}

std::string bz_tag(double bz) { return "bz" + format_double(bz); }

void write_manifest(const pipeline::RunConfig& config, const std::string& command,
                    const std::vector<fs::path>& outputs, const fs::path& dir) {
  nlohmann::json m;
  m["tool"] = "nvaqs";
  m["version"] = version_string();
  m["command"] = command;
  m["config"] = pipeline::config_to_json(config);
  m["seed"] = config.lattice.seed;
  nlohmann::json profiles = nlohmann::json::object();
  for (const auto& name : {config.device_profile, config.simulator_profile}) {
    profiles[name] = device::profile_to_json(device::resolve_profile(name));
  }
  m["profiles"] = profiles;
  m["outputs"] = nlohmann::json::array();
  for (const auto& p : outputs) {
    m["outputs"].push_back(p.string());
  }
  io::write_json(dir / "manifest.json", m);
}

planner::PartitionPlan make_plan(const pipeline::RunConfig& config,
                                 const bathgen::BathConfiguration& bath) {
  return planner::partition_bath(bath, device::resolve_profile(config.device_profile),
                                 device::resolve_profile(config.simulator_profile));
}

void write_gnuplot(const fs::path& dir, const std::vector<pipeline::FigureSeries>& items) {
  std::ofstream out(dir / "plot.gp");
  if (!out) {
    throw IoError("cannot write " + (dir / "plot.gp").string());
  }
  out << "set datafile separator ','\nset terminal pngcairo size 900,600\n";
  for (const auto& item : items) {
    out << "set output '" << item.label << "_phi.png'\n"
        << "set xlabel 't (us)'\nset ylabel 'phi(t)'\n"
        << "plot '" << item.label << "_series.csv' every ::2 using 1:2 with lines title 'Re', "
        << "'' every ::2 using 1:3 with lines title 'Im'\n";
    if (item.cher) {
      out << "set output '" << item.label << "_cher.png'\n"
          << "set xlabel 'omega (rad/us)'\nset ylabel 'w(omega)'\n"
          << "plot '" << item.label << "_cher.csv' every ::2 using 1:2 with lines notitle\n";
    }
  }
}

}  // namespace

pipeline::RunConfig resolve_config(const Overrides& o, pipeline::RunConfig base) {
  pipeline::RunConfig c = std::move(base);
  if (o.config_file) {
    auto j = io::read_json(*o.config_file);
    if (j.contains("config") && j.at("config").is_object()) {
      j = j.at("config");
    }
    c = pipeline::config_from_json(j, c);
  }
  if (o.bath_file) c.bath_file = *o.bath_file;
  if (o.seed) c.lattice.seed = *o.seed;
  if (!o.bz.empty()) c.bz_gauss = o.bz;
  if (o.polarization) c.polarization = *o.polarization;
  if (o.backend) c.device_backend = pipeline::parse_backend(*o.backend);
  if (o.sim_backend) c.simulator_backend = pipeline::parse_backend(*o.sim_backend);
  if (o.profile) c.device_profile = *o.profile;
  if (o.sim_profile) c.simulator_profile = *o.sim_profile;
  if (o.placement) c.placement = *o.placement;
  if (o.shots) c.shots = *o.shots;
  if (o.trajectories) c.trajectories = *o.trajectories;
  if (o.t_max) c.t_max = *o.t_max;
  if (o.t_steps) c.t_steps = *o.t_steps;
  if (o.num_freqs) c.num_freqs = *o.num_freqs;
  if (o.window_sigma) c.window_sigma = *o.window_sigma;
  if (o.out_dir) c.out_dir = *o.out_dir;
  if (o.jobs) c.jobs = *o.jobs;
  c.validate();
  return c;
}

int cmd_bath(const pipeline::RunConfig& config) {
  const auto bath = pipeline::prepare_bath(config);
  ensure_dir(config.out_dir);
  const auto path = config.out_dir / "bath.json";
  io::save_bath(path, bath);
  write_manifest(config, "bath", {path}, config.out_dir);
  std::cout << "wrote " << path.string() << ": " << bath.sites.size() << " sites, "
            << bath.inner_count() << " inner nuclei\n";
  return 0;
}

int cmd_plan(const pipeline::RunConfig& config) {
  const auto bath = pipeline::prepare_bath(config);
  const auto plan = make_plan(config, bath);
  ensure_dir(config.out_dir);
  const auto path = config.out_dir / "plan.json";
  io::write_json(path, planner::plan_to_json(plan));
  write_manifest(config, "plan", {path}, config.out_dir);
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    const auto& group = plan.groups[g];
    std::cout << "g" << g << " " << group.profile << " nuclei " << group.nuclei.front() << ".."
              << group.nuclei.back() << " qubits " << group.qubits << '\n';
  }
  return 0;
}

int cmd_run(const pipeline::RunConfig& config) {
  const auto bath = pipeline::prepare_bath(config);
  const auto settings = pipeline::settings_from_config(config);
  const auto plan = make_plan(config, bath);
  const auto times = config.time_grid();
  std::vector<std::pair<fs::path, DephasingSeries>> pending;
  for (double bz : config.bz_gauss) {
    auto result = pipeline::run_plan(bath, plan, bz, times, settings);
    for (std::size_t g = 0; g < result.groups.size(); ++g) {
      pending.emplace_back(config.out_dir / ("series_" + bz_tag(bz) + "_g" + std::to_string(g) + ".csv"),
                           std::move(result.groups[g]));
    }
    pending.emplace_back(config.out_dir / ("series_" + bz_tag(bz) + "_combined.csv"),
                         std::move(result.combined));
  }
  ensure_dir(config.out_dir);
  std::vector<fs::path> outputs;
  for (const auto& [path, series] : pending) {
    write_series_csv(path, series);
    outputs.push_back(path);
  }
  io::write_json(config.out_dir / "plan.json", planner::plan_to_json(plan));
  outputs.push_back(config.out_dir / "plan.json");
  write_manifest(config, "run", outputs, config.out_dir);
  std::cout << "ran " << plan.groups.size() << " groups at " << config.bz_gauss.size()
            << " field value(s); output in " << config.out_dir.string() << '\n';
  return 0;
}

int cmd_cher(const fs::path& input, const fs::path& output, const pipeline::RunConfig& config,
             double bandwidth) {
  const auto series = read_series_csv(input);
  const auto result = spectral::cher(series, config.num_freqs, config.window(), bandwidth);
  if (output.has_parent_path()) {
    ensure_dir(output.parent_path());
  }
  spectral::write_cher_csv(output, result);
  std::cout << "negativity " << format_double(result.negativity) << '\n';
  return 0;
}

int cmd_figure(const std::string& name, const pipeline::RunConfig& config, bool gnuplot) {
  const auto items = pipeline::run_figure(name, config);
  const fs::path dir = config.out_dir / name;
  ensure_dir(dir);
  std::vector<fs::path> outputs;
  for (const auto& item : items) {
    const auto series_path = dir / (item.label + "_series.csv");
    write_series_csv(series_path, item.series);
    outputs.push_back(series_path);
    double max_imag = 0.0;
    for (const auto& v : item.series.values) {
      max_imag = std::max(max_imag, std::abs(v.imag()));
    }
    std::cout << item.label << ": max|Im phi| " << format_double(max_imag);
    if (item.cher) {
      const auto cher_path = dir / (item.label + "_cher.csv");
      spectral::write_cher_csv(cher_path, *item.cher);
      outputs.push_back(cher_path);
      std::cout << ", negativity " << format_double(item.cher->negativity) << ", peaks "
                << spectral::local_maxima(*item.cher).size();
    }
    std::cout << '\n';
  }
  if (gnuplot) {
    write_gnuplot(dir, items);
    outputs.push_back(dir / "plot.gp");
  }
  write_manifest(config, "figure " + name, outputs, dir);
  return 0;
}

}  // namespace nvaqs::cli

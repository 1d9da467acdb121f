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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "nvaqs/common.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitBackend = 3;
constexpr int kExitIo = 4;

void add_common(CLI::App& app, nvaqs::cli::Overrides& o) {
  app.add_option("--config", o.config_file, "JSON run config or a previous manifest")
      ->check(CLI::ExistingFile);
  app.add_option("--bath", o.bath_file, "Bath JSON instead of generating one")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", o.seed, "Bath sampling and shot seed");
  app.add_option("--bz", o.bz, "Field values in gauss (repeatable, comma separated)")
      ->delimiter(',');
  app.add_option("--pol", o.polarization, "Inner polarization: none|z|x|ztheta:t|xz:t1,t2");
  app.add_option("--backend", o.backend, "Device-group backend: analytic|exact-circuit|shots|noisy");
  app.add_option("--sim-backend", o.sim_backend, "Simulator-group backend");
  app.add_option("--profile", o.profile, "Device profile name or JSON file");
  app.add_option("--sim-profile", o.sim_profile, "Simulator profile name or JSON file");
  app.add_option("--placement", o.placement, "Named placement on the device profile");
  app.add_option("--shots", o.shots, "Shots per time point for the shot backend");
  app.add_option("--trajectories", o.trajectories, "Noise trajectories per time point");
  app.add_option("--tmax", o.t_max, "Last time point in us");
  app.add_option("--tsteps", o.t_steps, "Number of time points including t = 0");
  app.add_option("--num-freqs", o.num_freqs, "CHER frequency bins");
  app.add_option("--window-sigma", o.window_sigma, "Gaussian window width in us (0: none)");
  app.add_option("--out", o.out_dir, "Output directory");
  app.add_option("--jobs", o.jobs, "Worker threads (0: all cores)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"NV-center 13C bath dephasing: analytic, circuit and spectral pipeline"};
  app.set_version_flag("--version", nvaqs::version_string());
  app.require_subcommand(1);

  nvaqs::cli::Overrides o;
  auto* bath = app.add_subcommand("bath", "Generate a bath and write bath.json");
  auto* plan = app.add_subcommand("plan", "Partition the bath into device and simulator groups");
  auto* run = app.add_subcommand("run", "Run every group and write per-group and combined series");
  auto* cher = app.add_subcommand("cher", "CHER of a series CSV");
  auto* figure = app.add_subcommand("figure", "Canned scenario: fig5|fig6|fig7|fig8");
  for (auto* sub : {bath, plan, run, cher, figure}) {
    add_common(*sub, o);
  }

  std::string cher_in;
  std::string cher_out;
  double bandwidth = 0.0;
  cher->add_option("input", cher_in, "Series CSV")->required();
  cher->add_option("-o,--output", cher_out, "CHER CSV (default: <input>_cher.csv)");
  cher->add_option("--bandwidth", bandwidth, "Frequency the Nyquist limit must exceed, rad/us");

  std::string figure_name;
  bool gnuplot = false;
  figure->add_option("name", figure_name, "fig5|fig6|fig7|fig8")->required();
  figure->add_flag("--gnuplot", gnuplot, "Also write a gnuplot script");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    nvaqs::pipeline::RunConfig base;
    if (figure->parsed()) {
      base.bz_gauss = {50.0, 100.0, 200.0};
    }
    const auto config = nvaqs::cli::resolve_config(o, base);
    if (bath->parsed()) {
      return nvaqs::cli::cmd_bath(config);
    }
    if (plan->parsed()) {
      return nvaqs::cli::cmd_plan(config);
    }
    if (run->parsed()) {
      return nvaqs::cli::cmd_run(config);
    }
    if (cher->parsed()) {
      std::string out = cher_out;
      if (out.empty()) {
        out = cher_in;
        if (out.size() > 4 && out.ends_with(".csv")) {
          out.resize(out.size() - 4);
        }
        out += "_cher.csv";
      }
      return nvaqs::cli::cmd_cher(cher_in, out, config, bandwidth);
    }
    return nvaqs::cli::cmd_figure(figure_name, config, gnuplot);
  } catch (const nvaqs::PreconditionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const nvaqs::IoError& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const nvaqs::Error& e) {
    std::cerr << "backend error: " << e.what() << '\n';
    return kExitBackend;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "backend error: " << e.what() << '\n';
    return kExitBackend;
  }
}

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

#include "nvaqs/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>

#include "nvaqs/device/crosstalk.hpp"
#include "nvaqs/io.hpp"
#include "nvaqs/qsim/aqs.hpp"
#include "nvaqs/rng.hpp"

namespace nvaqs::pipeline {
namespace {

double parse_angle(std::string_view text, std::string_view token) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
    throw PreconditionError("bad angle '" + std::string(text) + "' in polarization '" +
                            std::string(token) + "'");
  }
  return value;
}

std::string bz_tag(double bz) {
  return "bz" + format_double(bz);
}

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kAnalytic:
      return "analytic";
    case Backend::kExactCircuit:
      return "exact-circuit";
    case Backend::kShots:
      return "shots";
    case Backend::kNoisy:
      return "noisy";
  }
  return "?";
}

Backend parse_backend(std::string_view name) {
  for (auto b : {Backend::kAnalytic, Backend::kExactCircuit, Backend::kShots, Backend::kNoisy}) {
    if (name == backend_name(b)) {
      return b;
    }
  }
  throw PreconditionError("unknown backend '" + std::string(name) +
                          "'; expected analytic, exact-circuit, shots or noisy");
}

Vec3 parse_polarization(std::string_view token) {
  if (token == "none") {
    return Vec3::Zero();
  }
  if (token == "z") {
    return {0.0, 0.0, 1.0};
  }
  if (token == "x") {
    return {1.0, 0.0, 0.0};
  }
  if (token.starts_with("ztheta:")) {
    const double t = parse_angle(token.substr(7), token);
    return qsim::PolarizationOracle{qsim::PolarizationFamily::kZTheta, t, 0.0}.bloch_vector();
  }
  if (token.starts_with("xz:")) {
    const auto rest = token.substr(3);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) {
      throw PreconditionError("polarization 'xz' needs two angles: xz:t1,t2");
    }
    const double t1 = parse_angle(rest.substr(0, comma), token);
    const double t2 = parse_angle(rest.substr(comma + 1), token);
    return qsim::PolarizationOracle{qsim::PolarizationFamily::kXZ, t1, t2}.bloch_vector();
  }
  throw PreconditionError("unknown polarization '" + std::string(token) +
                          "'; expected none, z, x, ztheta:t or xz:t1,t2");
}

void RunConfig::validate() const {
  if (!bath_file) {
    lattice.validate();
  } else if (!std::filesystem::exists(*bath_file)) {
    throw PreconditionError("bath file " + bath_file->string() + " does not exist");
  }
  if (bz_gauss.empty()) {
    throw PreconditionError("at least one field value is required");
  }
  for (double bz : bz_gauss) {
    if (!(bz >= 0.0) || !std::isfinite(bz)) {
      throw PreconditionError("field values must be finite and >= 0");
    }
  }
  (void)parse_polarization(polarization);
  const bool shots_used = device_backend == Backend::kShots || simulator_backend == Backend::kShots;
  if (shots_used && shots < 2) {
    throw PreconditionError("shot backend needs at least 2 shots");
  }
  if (trajectories < 1) {
    throw PreconditionError("trajectories must be at least 1");
  }
  if (!(t_max > 0.0) || !std::isfinite(t_max) || t_steps < 2) {
    throw PreconditionError("time grid needs t_max > 0 and at least 2 points");
  }
  if (num_freqs < 2 || num_freqs % 2 != 0) {
    throw PreconditionError("num_freqs must be even and at least 2");
  }
  if (window_sigma < 0.0) {
    throw PreconditionError("window sigma must be >= 0");
  }
}

std::vector<double> RunConfig::time_grid() const { return uniform_time_grid(t_max, t_steps); }

spectral::Window RunConfig::window() const {
  return window_sigma > 0.0 ? spectral::Window::gaussian(window_sigma) : spectral::Window::none();
}

nlohmann::json config_to_json(const RunConfig& c) {
  nlohmann::json j;
  j["lattice"] = io::lattice_spec_to_json(c.lattice);
  if (c.bath_file) {
    j["bath_file"] = c.bath_file->string();
  }
  j["bz_gauss"] = c.bz_gauss;
  j["polarization"] = c.polarization;
  j["device_backend"] = backend_name(c.device_backend);
  j["simulator_backend"] = backend_name(c.simulator_backend);
  j["device_profile"] = c.device_profile;
  j["simulator_profile"] = c.simulator_profile;
  j["placement"] = c.placement;
  j["shots"] = c.shots;
  j["trajectories"] = c.trajectories;
  j["t_max_us"] = c.t_max;
  j["t_steps"] = c.t_steps;
  j["num_freqs"] = c.num_freqs;
  j["window_sigma_us"] = c.window_sigma;
  j["out_dir"] = c.out_dir.string();
  j["jobs"] = c.jobs;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j, const RunConfig& base) {
  RunConfig c = base;
  try {
    if (j.contains("lattice")) {
      c.lattice = io::lattice_spec_from_json(j.at("lattice"), c.lattice);
    }
    if (j.contains("bath_file")) {
      c.bath_file = j.at("bath_file").get<std::string>();
    }
    c.bz_gauss = j.value("bz_gauss", c.bz_gauss);
    c.polarization = j.value("polarization", c.polarization);
    if (j.contains("device_backend")) {
      c.device_backend = parse_backend(j.at("device_backend").get<std::string>());
    }
    if (j.contains("simulator_backend")) {
      c.simulator_backend = parse_backend(j.at("simulator_backend").get<std::string>());
    }
    c.device_profile = j.value("device_profile", c.device_profile);
    c.simulator_profile = j.value("simulator_profile", c.simulator_profile);
    c.placement = j.value("placement", c.placement);
    c.shots = j.value("shots", c.shots);
    c.trajectories = j.value("trajectories", c.trajectories);
    c.t_max = j.value("t_max_us", c.t_max);
    c.t_steps = j.value("t_steps", c.t_steps);
    c.num_freqs = j.value("num_freqs", c.num_freqs);
    c.window_sigma = j.value("window_sigma_us", c.window_sigma);
    if (j.contains("out_dir")) {
      c.out_dir = j.at("out_dir").get<std::string>();
    }
    c.jobs = j.value("jobs", c.jobs);
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError(std::string("malformed config: ") + e.what());
  }
  return c;
}

bathgen::BathConfiguration prepare_bath(const RunConfig& config) {
  auto bath = config.bath_file ? io::load_bath(*config.bath_file)
                               : bathgen::generate_bath(config.lattice);
  return bathgen::assign_polarizations(std::move(bath), parse_polarization(config.polarization));
}

ExecutionSettings settings_from_config(const RunConfig& config) {
  ExecutionSettings s;
  const auto dev = device::resolve_profile(config.device_profile);
  const auto sim = device::resolve_profile(config.simulator_profile);
  s.profiles[sim.name] = sim;
  s.profiles[dev.name] = dev;
  s.backends[sim.name] = config.simulator_backend;
  s.backends[dev.name] = config.device_backend;
  s.placement = config.placement;
  s.shots = config.shots;
  s.trajectories = config.trajectories;
  s.seed = config.lattice.seed;
  s.jobs = config.jobs;
  return s;
}

DephasingSeries run_planned_group(const bathgen::BathConfiguration& bath,
                                  const planner::PlannedGroup& group, std::size_t group_index,
                                  double bz_gauss, const std::vector<double>& times,
                                  const ExecutionSettings& settings) {
  const auto sites = planner::group_sites(bath, group);
  const auto profile_it = settings.profiles.find(group.profile);
  if (profile_it == settings.profiles.end()) {
    throw PreconditionError("plan uses unknown profile " + group.profile);
  }
  const auto backend_it = settings.backends.find(group.profile);
  const Backend backend =
      backend_it == settings.backends.end() ? Backend::kAnalytic : backend_it->second;
  const std::string label = "g" + std::to_string(group_index);

  if (backend == Backend::kAnalytic) {
    auto series =
        physics::dephasing_factor_analytic(sites, bz_gauss, times, settings.constants, settings.jobs);
    series.metadata.group = label;
    return series;
  }

  const int pairs = static_cast<int>(sites.size());
  if (pairs > profile_it->second.max_pairs) {
    throw CapacityError("group " + label + " has " + std::to_string(pairs) +
                        " nuclei; profile " + group.profile + " takes " +
                        std::to_string(profile_it->second.max_pairs));
  }
  qsim::RunOptions options;
  options.jobs = settings.jobs;
  options.backend = std::string(backend_name(backend));
  options.group_label = label;
  options.bz_gauss = bz_gauss;
  options.seed = mix_seed(mix_seed(settings.seed, group_index),
                          std::bit_cast<std::uint64_t>(bz_gauss));
  if (backend == Backend::kShots) {
    options.shots = settings.shots;
  }
  if (backend == Backend::kNoisy) {
    options.transform = device::noisy_transform(profile_it->second, settings.placement, pairs);
    options.trajectories = settings.trajectories;
  }
  try {
    return qsim::run_group(qsim::make_group(sites, bz_gauss, settings.constants), times, options);
  } catch (const PreconditionError&) {
    throw;
  } catch (const CapacityError&) {
    throw;
  } catch (const std::exception& e) {
    throw BackendError("group " + label + " failed: " + e.what());
  }
}

RunResult run_plan(const bathgen::BathConfiguration& bath, const planner::PartitionPlan& plan,
                   double bz_gauss, const std::vector<double>& times,
                   const ExecutionSettings& settings) {
  plan.validate(bath);
  RunResult result;
  result.plan = plan;
  for (std::size_t g = 0; g < plan.groups.size(); ++g) {
    result.groups.push_back(run_planned_group(bath, plan.groups[g], g, bz_gauss, times, settings));
  }
  if (result.groups.empty()) {
    result.combined.times = times;
    result.combined.values.assign(times.size(), Complex(1.0, 0.0));
    result.combined.metadata = {"analytic", bz_gauss, "empty"};
  } else {
    result.combined = planner::combine_groups(result.groups);
  }
  result.combined.metadata.bz_gauss = bz_gauss;
  return result;
}

double required_bandwidth(const bathgen::BathConfiguration& bath, double bz_gauss) {
  return physics::max_precession_frequency(bath.sites, bz_gauss);
}

std::vector<std::string> figure_names() { return {"fig5", "fig6", "fig7", "fig8"}; }

std::vector<std::string> crosstalk_placements() { return {"left_right", "top_left", "top_right"}; }

std::vector<FigureSeries> run_figure(std::string_view name, const RunConfig& base) {
  RunConfig config = base;
  if (name == "fig5" || name == "fig6" || name == "fig7") {
    config.polarization = name == "fig5" ? "none" : name == "fig6" ? "z" : "x";
  } else if (name == "fig8") {
    config.polarization = "none";
    config.device_backend = Backend::kNoisy;
  } else {
    std::string known;
    for (const auto& n : figure_names()) {
      known += " " + n;
    }
    throw PreconditionError("unknown figure '" + std::string(name) + "'; expected one of" + known);
  }
  config.validate();
  const auto bath = prepare_bath(config);
  const auto times = config.time_grid();
  const auto window = config.window();
  auto settings = settings_from_config(config);
  const std::string prefix(name);
  std::vector<FigureSeries> out;

  if (name != "fig8") {
    for (double bz : config.bz_gauss) {
      auto series = physics::dephasing_factor_analytic(bath.sites, bz, times, settings.constants,
                                                       config.jobs);
      auto c = spectral::cher(series, config.num_freqs, window, required_bandwidth(bath, bz));
      out.push_back({prefix + "_" + bz_tag(bz), std::move(series), std::move(c)});
    }
    return out;
  }

  const auto& device = settings.profiles.at(device::resolve_profile(config.device_profile).name);
  for (const auto& placement : crosstalk_placements()) {
    settings.placement = placement;
    const int pairs = static_cast<int>(device.placement(placement, 1).pairs.size());
    auto pair_profile = device;
    pair_profile.max_pairs = pairs;
    const auto sim = settings.profiles.at(device::resolve_profile(config.simulator_profile).name);

    planner::PartitionPlan prototype;
    std::vector<int> proto_nuclei;
    for (int k = 0; k < std::min<int>(pairs, static_cast<int>(bath.sites.size())); ++k) {
      proto_nuclei.push_back(k);
    }
    prototype.groups.push_back(
        {proto_nuclei, device.name, 1 + 2 * static_cast<int>(proto_nuclei.size()), true});
    const auto full = planner::partition_bath(bath, pair_profile, sim);
    for (double bz : config.bz_gauss) {
      auto proto_bath = bath;
      proto_bath.sites.resize(proto_nuclei.size());
      auto proto = run_plan(proto_bath, prototype, bz, times, settings).combined;
      out.push_back({prefix + "_" + placement + "_prototype_" + bz_tag(bz), std::move(proto),
                     std::nullopt});
      auto combined = run_plan(bath, full, bz, times, settings).combined;
      auto c = spectral::cher(combined, config.num_freqs, window, required_bandwidth(bath, bz));
      out.push_back({prefix + "_" + placement + "_full_" + bz_tag(bz), std::move(combined),
                     std::move(c)});
    }
  }
  return out;
}

}  // namespace nvaqs::pipeline

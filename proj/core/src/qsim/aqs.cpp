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

#include "nvaqs/qsim/aqs.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "nvaqs/parallel.hpp"
#include "nvaqs/qsim/state.hpp"
#include "nvaqs/qsim/tomography.hpp"
#include "nvaqs/rng.hpp"

namespace nvaqs::qsim {
namespace {

constexpr double kBlochTolerance = 1e-12;

bool near(double a, double b) { return std::abs(a - b) <= kBlochTolerance; }

}  // namespace

CircuitGateParams gate_params(const physics::PrecessionSpec& spec, double t) {
  if (!(t >= 0.0)) {
    throw PreconditionError("gate parameters need t >= 0");
  }
  const double half = 0.5 * spec.omega1_norm * t;
  const double c = std::cos(half);
  const double s = std::sin(half);
  const Vec3& u = spec.axis;
  const double w0t = spec.omega0 * t;

  CircuitGateParams p;
  // theta = 2 acos(sqrt(c^2 + s^2 u_z^2))
  p.theta = 2.0 * std::atan2(std::abs(s) * std::hypot(u.x(), u.y()), std::hypot(c, s * u.z()));
  p.big_theta = std::arg(Complex(c, -s * u.z()));
  const Complex transverse(s * u.x(), s * u.y());
  p.big_phi = transverse == Complex(0.0, 0.0) ? 0.0 : std::arg(transverse);
  p.phi = -0.5 * kPi - p.big_theta + p.big_phi;
  p.lambda = 0.5 * kPi - w0t - p.big_theta - p.big_phi;
  p.gamma = 0.5 * w0t + p.big_theta;
  return p;
}

Eigen::Matrix2cd reconstruct_unitary(const CircuitGateParams& params) {
  return std::polar(1.0, params.gamma) * u_matrix(params.theta, params.phi, params.lambda);
}

std::string_view family_name(PolarizationFamily family) {
  switch (family) {
    case PolarizationFamily::kZUp:
      return "(0,0,1)";
    case PolarizationFamily::kX:
      return "(1,0,0)";
    case PolarizationFamily::kUnpolarized:
      return "(0,0,0)";
    case PolarizationFamily::kZTheta:
      return "(0,0,cos t)";
    case PolarizationFamily::kXZ:
      return "(sin t1 sin t2,0,cos t1)";
  }
  return "?";
}

Vec3 PolarizationOracle::bloch_vector() const {
  switch (family) {
    case PolarizationFamily::kZUp:
      return {0.0, 0.0, 1.0};
    case PolarizationFamily::kX:
      return {1.0, 0.0, 0.0};
    case PolarizationFamily::kUnpolarized:
      return Vec3::Zero();
    case PolarizationFamily::kZTheta:
      return {0.0, 0.0, std::cos(theta1)};
    case PolarizationFamily::kXZ:
      return {std::sin(theta1) * std::sin(theta2), 0.0, std::cos(theta1)};
  }
  return Vec3::Zero();
}

PolarizationOracle oracle_for(const Vec3& p) {
  const auto unsupported = [&](const std::string& reason) {
    std::string msg = "unsupported polarization (" + std::to_string(p.x()) + ", " +
                      std::to_string(p.y()) + ", " + std::to_string(p.z()) + "): " + reason +
                      "; supported families are";
    for (auto f : {PolarizationFamily::kZUp, PolarizationFamily::kUnpolarized,
                   PolarizationFamily::kZTheta, PolarizationFamily::kX, PolarizationFamily::kXZ}) {
      msg += " ";
      msg += family_name(f);
    }
    return PreconditionError(msg);
  };
  if (!p.allFinite()) {
    throw unsupported("non-finite component");
  }
  if (p.norm() > 1.0 + kBlochTolerance) {
    throw unsupported("not a Bloch vector");
  }
  if (!near(p.y(), 0.0)) {
    throw unsupported("y component");
  }
  if (near(p.x(), 0.0) && near(p.z(), 1.0)) {
    return {PolarizationFamily::kZUp, 0.0, 0.0};
  }
  if (near(p.x(), 1.0) && near(p.z(), 0.0)) {
    return {PolarizationFamily::kX, 0.5 * kPi, 0.0};
  }
  if (near(p.x(), 0.0) && near(p.z(), 0.0)) {
    return {PolarizationFamily::kUnpolarized, 0.0, 0.0};
  }
  const double theta1 = std::acos(std::clamp(p.z(), -1.0, 1.0));
  if (near(p.x(), 0.0)) {
    return {PolarizationFamily::kZTheta, theta1, 0.0};
  }
  const double s1 = std::sin(theta1);
  const double theta2 = std::asin(std::clamp(p.x() / s1, -1.0, 1.0));
  return {PolarizationFamily::kXZ, theta1, theta2};
}

std::vector<GateOp> polarization_oracle(const PolarizationOracle& oracle, int nucleus,
                                        int ancilla) {
  switch (oracle.family) {
    case PolarizationFamily::kZUp:
      return {};
    case PolarizationFamily::kX:
      return {u(nucleus, 0.5 * kPi, 0.0, 0.0)};
    case PolarizationFamily::kUnpolarized:
      return {h(nucleus), cx(nucleus, ancilla)};
    case PolarizationFamily::kZTheta:
      return {u(nucleus, oracle.theta1, 0.0, 0.0), cx(nucleus, ancilla)};
    case PolarizationFamily::kXZ:
      return {u(nucleus, oracle.theta1, 0.0, 0.0), u(ancilla, oracle.theta2, 0.0, 0.0),
              cx(nucleus, ancilla)};
  }
  return {};
}

int GroupSpec::num_qubits() const {
  int top = electron;
  for (const auto& pair : pairs) {
    top = std::max({top, pair.nucleus, pair.ancilla});
  }
  return top + 1;
}

void GroupSpec::validate() const {
  if (pairs.empty()) {
    throw PreconditionError("a group needs at least one nucleus-ancilla pair");
  }
  std::set<int> used{electron};
  if (electron < 0) {
    throw PreconditionError("negative electron index");
  }
  for (const auto& pair : pairs) {
    if (pair.nucleus < 0 || pair.ancilla < 0) {
      throw PreconditionError("negative qubit index in group");
    }
    if (!used.insert(pair.nucleus).second || !used.insert(pair.ancilla).second) {
      throw PreconditionError("group qubit indices must be distinct");
    }
    (void)oracle_for(pair.polarization);
  }
}

GroupSpec make_group(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                     const physics::PhysicalConstants& constants) {
  GroupSpec group;
  group.electron = 0;
  int i = 0;
  for (const auto& site : sites) {
    group.pairs.push_back({2 * i + 1, 2 * i + 2, physics::site_precession(site, bz_gauss, constants),
                           site.polarization});
    ++i;
  }
  return group;
}

Circuit build_aqs_circuit(const GroupSpec& group, double t) {
  group.validate();
  Circuit circuit;
  circuit.num_qubits = group.num_qubits();
  circuit.gates.push_back(h(group.electron));
  for (const auto& pair : group.pairs) {
    for (const auto& g : polarization_oracle(oracle_for(pair.polarization), pair.nucleus,
                                             pair.ancilla)) {
      circuit.gates.push_back(g);
    }
  }
  for (const auto& pair : group.pairs) {
    circuit.gates.push_back(rz(pair.nucleus, pair.spec.omega0 * t));
  }
  for (const auto& pair : group.pairs) {
    const auto p = gate_params(pair.spec, t);
    circuit.gates.push_back(cu(group.electron, pair.nucleus, p.theta, p.phi, p.lambda, p.gamma));
  }
  return circuit;
}

DephasingSeries run_group(const GroupSpec& group, std::span<const double> times,
                          const RunOptions& options) {
  validate_time_grid(times);
  group.validate();
  if (options.shots != 0 && options.shots < 2) {
    throw PreconditionError("shot mode needs at least 2 shots");
  }
  if (group.num_qubits() > kMaxQubits) {
    throw CapacityError("group needs " + std::to_string(group.num_qubits()) +
                        " qubits; the simulator holds " + std::to_string(kMaxQubits));
  }

  DephasingSeries series;
  series.times.assign(times.begin(), times.end());
  series.values.assign(times.size(), Complex(0.0, 0.0));
  series.metadata = {options.backend, options.bz_gauss, options.group_label};

  parallel_for(times.size(), options.jobs, [&](std::size_t, std::size_t i) {
    Circuit circuit = build_aqs_circuit(group, times[i]);
    if (options.transform) {
      circuit = options.transform(circuit);
    }
    circuit.validate();
    const bool stochastic = circuit.has_stochastic_gates();
    const int repetitions = stochastic ? std::max(1, options.trajectories) : 1;
    Rng rng(mix_seed(options.seed, i));
    QuantumState state(circuit.num_qubits);
    Complex sum(0.0, 0.0);
    for (int r = 0; r < repetitions; ++r) {
      if (r > 0) {
        state.reset();
      }
      state.apply(circuit, &rng);
      if (options.shots == 0) {
        sum += tomograph_electron(state, group.electron);
      } else {
        const std::int64_t share =
            std::max<std::int64_t>(2, options.shots / repetitions);
        sum += tomograph_electron(state, group.electron, share, rng);
      }
    }
    series.values[i] = sum / static_cast<double>(repetitions);
  });
  return series;
}

}  // namespace nvaqs::qsim

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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/common.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/qsim/circuit.hpp"
#include "nvaqs/series.hpp"

/// Analog quantum simulation circuits for the NV dephasing factor.
///
/// Qubit layout of a group: electron at 0, then for pair i the nucleus at
/// 2i + 1 and its ancilla at 2i + 2.
namespace nvaqs::qsim {

/// Parameters of the controlled gate e^{i gamma} U(theta, phi, lambda) that
/// reproduces U1(t) U0^dag(t) for one nucleus.
struct CircuitGateParams {
  double theta = 0.0;
  double phi = 0.0;
  double lambda = 0.0;
  double gamma = 0.0;
  double big_theta = 0.0;  // Arg[cos(W1 t/2) - i sin(W1 t/2) u_z]
  double big_phi = 0.0;    // Arg[sin(W1 t/2) (u_x + i u_y)], 0 where undefined
};

/// Throws PreconditionError for t < 0.
CircuitGateParams gate_params(const physics::PrecessionSpec& spec, double t);

/// e^{i gamma} U(theta, phi, lambda).
Eigen::Matrix2cd reconstruct_unitary(const CircuitGateParams& params);

/// The supported oracle circuits, cheapest first.
enum class PolarizationFamily {
  kZUp,         // (0, 0, 1): no gates
  kX,           // (1, 0, 0): U(pi/2) on the nucleus
  kUnpolarized, // (0, 0, 0): H, CX
  kZTheta,      // (0, 0, cos t): U(t), CX
  kXZ,          // (sin t1 sin t2, 0, cos t1): U(t1), U(t2) on the ancilla, CX
};

std::string_view family_name(PolarizationFamily family);

struct PolarizationOracle {
  PolarizationFamily family = PolarizationFamily::kZUp;
  double theta1 = 0.0;
  double theta2 = 0.0;

  /// Bloch vector the oracle leaves on the nucleus.
  [[nodiscard]] Vec3 bloch_vector() const;
};

/// Cheapest oracle preparing `p`. Throws PreconditionError, naming the
/// supported families, when p has a y component or |p| > 1.
PolarizationOracle oracle_for(const Vec3& p);

/// Gates of the oracle on (nucleus, ancilla).
std::vector<GateOp> polarization_oracle(const PolarizationOracle& oracle, int nucleus,
                                        int ancilla);

struct GroupPair {
  int nucleus = 1;
  int ancilla = 2;
  physics::PrecessionSpec spec;
  Vec3 polarization = Vec3::Zero();
};

struct GroupSpec {
  int electron = 0;
  std::vector<GroupPair> pairs;

  /// One more than the largest index in use.
  [[nodiscard]] int num_qubits() const;

  /// Throws PreconditionError on repeated indices, an empty group or an
  /// unsupported polarization.
  void validate() const;
};

/// Group in the standard layout for the given sites.
GroupSpec make_group(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                     const physics::PhysicalConstants& constants =
                         physics::PhysicalConstants::standard());

/// H(e), oracles, RZ(W0 t) on each nucleus, CU(e -> nucleus) per pair.
Circuit build_aqs_circuit(const GroupSpec& group, double t);

struct RunOptions {
  std::int64_t shots = 0;  // 0 selects exact tomography
  std::uint64_t seed = 0;
  int jobs = 1;
  /// Repetitions averaged when the transformed circuit contains stochastic gates.
  int trajectories = 1;
  /// Rewrites each circuit before simulation (routing, noise). The electron
  /// must stay on the same qubit index.
  std::function<Circuit(const Circuit&)> transform;
  std::string backend = "exact-circuit";
  std::string group_label = "group";
  double bz_gauss = 0.0;
};

/// One fresh circuit per time point, simulated and read out on the electron.
DephasingSeries run_group(const GroupSpec& group, std::span<const double> times,
                          const RunOptions& options = {});

}  // namespace nvaqs::qsim

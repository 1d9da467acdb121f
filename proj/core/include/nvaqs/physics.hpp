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

#include <span>
#include <vector>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/common.hpp"
#include "nvaqs/series.hpp"

/// NV-13C pure-dephasing physics.
///
/// Units are fixed here and used everywhere else: angular frequencies in
/// rad/us, times in us, fields in gauss, lengths in nm.
namespace nvaqs::physics {

struct PhysicalConstants {
  double zero_field_splitting;  // D, rad/us
  double gamma_e;               // rad/us/G
  double gamma_c;               // rad/us/G
  double dipolar_prefactor;     // mu0 hbar gamma_e gamma_c / 4pi, rad/us nm^3

  /// D/2pi = 2.87 GHz, gamma_e/2pi = 2.8025 MHz/G, gamma_C/2pi = 1.0704 kHz/G,
  /// with the dipolar prefactor derived from CODATA mu0 and hbar.
  static PhysicalConstants standard();
};

/// Electron branch selecting Omega_{+1} or Omega_{-1}.
enum class Branch { kPlus, kMinus };

/// Nuclear precession conditioned on the electron state.
struct PrecessionSpec {
  double omega0 = 0.0;            // gamma_C Bz
  Vec3 omega1 = Vec3::Zero();     // +-A_z + (0, 0, omega0)
  double omega1_norm = 0.0;
  Vec3 axis = Vec3::UnitZ();      // omega1 / |omega1|, or e_z when degenerate
  bool degenerate = false;        // |omega1| == 0
};

/// Row A_z = (A_zx, A_zy, A_zz) of the dipolar hyperfine tensor for a
/// nucleus at r (nm). Throws PreconditionError inside the contact region.
Vec3 hyperfine_vector(const Vec3& r, const PhysicalConstants& constants,
                      double exclusion_radius = 0.5);

PrecessionSpec precession_spec(const Vec3& hyperfine, double bz_gauss,
                               const PhysicalConstants& constants, Branch branch = Branch::kPlus);

/// Convenience: hyperfine_vector + precession_spec for one site.
PrecessionSpec site_precession(const bathgen::NuclearSite& site, double bz_gauss,
                               const PhysicalConstants& constants);

/// Closed-form single-nucleus factor (four-term expression). The product of
/// these over a bath is the dephasing factor with the fast electron phase
/// exp[i(D + gamma_e Bz)t] dropped.
Complex analytic_factor(const PrecessionSpec& spec, const Vec3& polarization, double t);

/// Dephasing factor of a bath on a time grid, closed form.
DephasingSeries dephasing_factor_analytic(std::span<const bathgen::NuclearSite> sites,
                                          double bz_gauss, std::span<const double> times,
                                          const PhysicalConstants& constants =
                                              PhysicalConstants::standard(),
                                          int jobs = 1);

/// Same quantity from explicit 2x2 matrices: prod_k Tr[U1^dag U0 rho_k].
/// Independent of `analytic_factor`; used as its oracle.
Complex dephasing_factor_bruteforce(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                                    double t,
                                    const PhysicalConstants& constants =
                                        PhysicalConstants::standard());

/// exp(-i (omega . sigma) t / 2) by the axis-angle formula.
Eigen::Matrix2cd precession_unitary(const Vec3& omega, double t);

/// Largest precession frequency in the bath, max(Omega_0, max_k |Omega_1^(k)|).
double max_precession_frequency(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                                const PhysicalConstants& constants = PhysicalConstants::standard());

}  // namespace nvaqs::physics

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

#include "nvaqs/physics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nvaqs/parallel.hpp"

namespace nvaqs::physics {
namespace {

constexpr double kMu0Over4Pi = 1e-7;         // T m / A
constexpr double kHbar = 1.054571817e-34;    // J s
constexpr double kGaussPerTesla = 1e4;

}  // namespace

PhysicalConstants PhysicalConstants::standard() {
  const double gamma_e = kTwoPi * 2.8025;      // rad/us/G
  const double gamma_c = kTwoPi * 1.0704e-3;   // rad/us/G
  // SI gyromagnetic ratios in rad/s/T.
  const double gamma_e_si = gamma_e * 1e6 * kGaussPerTesla;
  const double gamma_c_si = gamma_c * 1e6 * kGaussPerTesla;
  // rad/s m^3 -> rad/us nm^3
  const double prefactor = kMu0Over4Pi * kHbar * gamma_e_si * gamma_c_si * 1e27 * 1e-6;
  return PhysicalConstants{kTwoPi * 2.87e3, gamma_e, gamma_c, prefactor};
}

Vec3 hyperfine_vector(const Vec3& r, const PhysicalConstants& constants, double exclusion_radius) {
  const double d = r.norm();
  if (!(d >= exclusion_radius)) {
    std::ostringstream msg;
    msg << "nucleus at " << d << " nm lies inside the " << exclusion_radius
        << " nm contact region where the dipolar form is invalid";
    throw PreconditionError(msg.str());
  }
  const Vec3 e = r / d;
  Vec3 a = -3.0 * e.z() * e;
  a.z() += 1.0;
  return a * (constants.dipolar_prefactor / (d * d * d));
}

PrecessionSpec precession_spec(const Vec3& hyperfine, double bz_gauss,
                               const PhysicalConstants& constants, Branch branch) {
  if (!(bz_gauss >= 0.0)) {
    throw PreconditionError("Bz must be non-negative");
  }
  PrecessionSpec spec;
  spec.omega0 = constants.gamma_c * bz_gauss;
  const double sign = branch == Branch::kPlus ? 1.0 : -1.0;
  spec.omega1 = sign * hyperfine + Vec3(0.0, 0.0, spec.omega0);
  spec.omega1_norm = spec.omega1.norm();
  if (spec.omega1_norm > 0.0) {
    spec.axis = spec.omega1 / spec.omega1_norm;
  } else {
    spec.axis = Vec3::UnitZ();
    spec.degenerate = true;
  }
  return spec;
}

PrecessionSpec site_precession(const bathgen::NuclearSite& site, double bz_gauss,
                               const PhysicalConstants& constants) {
  return precession_spec(hyperfine_vector(site.position, constants), bz_gauss, constants);
}

Complex analytic_factor(const PrecessionSpec& spec, const Vec3& p, double t) {
  const double c0 = std::cos(0.5 * spec.omega0 * t);
  const double s0 = std::sin(0.5 * spec.omega0 * t);
  if (spec.degenerate) {
    return {c0, -p.z() * s0};
  }
  const double c1 = std::cos(0.5 * spec.omega1_norm * t);
  const double s1 = std::sin(0.5 * spec.omega1_norm * t);
  const Vec3& u = spec.axis;
  const Complex i(0.0, 1.0);
  return Complex(c0, -p.z() * s0) * c1 + u.z() * Complex(s0, p.z() * c0) * s1 +
         i * ((p.x() * u.x() + p.y() * u.y()) * c0 * s1) +
         i * ((p.x() * u.y() - p.y() * u.x()) * s0 * s1);
}

DephasingSeries dephasing_factor_analytic(std::span<const bathgen::NuclearSite> sites,
                                          double bz_gauss, std::span<const double> times,
                                          const PhysicalConstants& constants, int jobs) {
  validate_time_grid(times);
  std::vector<PrecessionSpec> specs;
  specs.reserve(sites.size());
  for (const auto& site : sites) {
    specs.push_back(site_precession(site, bz_gauss, constants));
  }
  DephasingSeries out;
  out.times.assign(times.begin(), times.end());
  out.values.assign(times.size(), Complex(1.0, 0.0));
  out.metadata = SeriesMetadata{"analytic", bz_gauss, "all"};
  parallel_for(times.size(), jobs, [&](std::size_t, std::size_t j) {
    Complex value(1.0, 0.0);
    for (std::size_t k = 0; k < specs.size(); ++k) {
      value *= analytic_factor(specs[k], sites[k].polarization, times[j]);
    }
    out.values[j] = value;
  });
  return out;
}

Eigen::Matrix2cd precession_unitary(const Vec3& omega, double t) {
  const double w = omega.norm();
  Eigen::Matrix2cd u = Eigen::Matrix2cd::Identity();
  if (w == 0.0) {
    return u;
  }
  const Vec3 n = omega / w;
  const double c = std::cos(0.5 * w * t);
  const double s = std::sin(0.5 * w * t);
  const Complex i(0.0, 1.0);
  // cos(wt/2) I - i sin(wt/2) (n . sigma)
  u(0, 0) = Complex(c, 0.0) - i * s * n.z();
  u(0, 1) = -i * s * Complex(n.x(), -n.y());
  u(1, 0) = -i * s * Complex(n.x(), n.y());
  u(1, 1) = Complex(c, 0.0) + i * s * n.z();
  return u;
}

Complex dephasing_factor_bruteforce(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                                    double t, const PhysicalConstants& constants) {
  Complex total(1.0, 0.0);
  for (const auto& site : sites) {
    const PrecessionSpec spec = site_precession(site, bz_gauss, constants);
    const Eigen::Matrix2cd u0 = precession_unitary(Vec3(0.0, 0.0, spec.omega0), t);
    const Eigen::Matrix2cd u1 = precession_unitary(spec.omega1, t);
    const Vec3& p = site.polarization;
    Eigen::Matrix2cd rho;
    rho << Complex(1.0 + p.z(), 0.0), Complex(p.x(), -p.y()), Complex(p.x(), p.y()),
        Complex(1.0 - p.z(), 0.0);
    rho *= 0.5;
    total *= (u1.adjoint() * u0 * rho).trace();
  }
  return total;
}

double max_precession_frequency(std::span<const bathgen::NuclearSite> sites, double bz_gauss,
                                const PhysicalConstants& constants) {
  double best = constants.gamma_c * bz_gauss;
  for (const auto& site : sites) {
    best = std::max(best, site_precession(site, bz_gauss, constants).omega1_norm);
  }
  return best;
}

}  // namespace nvaqs::physics

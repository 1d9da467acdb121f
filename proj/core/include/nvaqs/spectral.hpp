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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "nvaqs/series.hpp"

/// Canonical Hamiltonian ensemble representation of a pure-dephasing series:
///   w(omega) = (1/2pi) * integral phi(t) exp(i omega t) dt.
///
/// Only t >= 0 is sampled. Negative times use phi(-t) = phi(t)^*, which makes
/// w real. For the conditional-evolution model this extension is the
/// definition of the two-sided process; it coincides with the physical
/// phi(-t) whenever every nucleus has (p x u)_z = 0. The t = 0 sample enters
/// as Re phi(0).
namespace nvaqs::spectral {

struct Window {
  enum class Kind { kNone, kGaussian };
  Kind kind = Kind::kNone;
  double sigma = 0.0;  // us

  static Window none() { return {}; }
  static Window gaussian(double sigma) { return {Kind::kGaussian, sigma}; }

  [[nodiscard]] std::string label() const;
  [[nodiscard]] double operator()(double t) const;
};

struct CherResult {
  std::vector<double> omegas;   // rad/us
  std::vector<double> weights;  // per rad/us
  double d_omega = 0.0;
  double negativity = 0.0;
  double dt = 0.0;              // time step of the source series
  int num_times = 0;            // samples of the source series
  double max_imag_residue = 0.0;
  Window window;
  SeriesMetadata source;
};

inline constexpr int kDefaultNumFreqs = 2048;

/// Trapezoid-rule transform of the Hermitian-extended series on the grid
/// omega_m = (m - M/2) * 2pi / (M dt), m = 0..M-1.
///
/// Throws PreconditionError for a grid that is not uniform from 0, an odd or
/// too small `num_freqs`, sigma <= 0, or a Nyquist frequency pi/dt not above
/// `required_bandwidth`. Throws BackendError if the imaginary residue
/// exceeds 1e-10.
CherResult cher(const DephasingSeries& series, int num_freqs = kDefaultNumFreqs,
                Window window = Window::none(), double required_bandwidth = 0.0);

/// -sum over negative bins of w * d_omega.
double negativity(const CherResult& result);

/// sum of w * d_omega.
double total_weight(const CherResult& result);

/// Exact inverse of the discrete transform: the (windowed) series on its
/// original grid.
DephasingSeries reconstruct_series(const CherResult& result);

/// Indices of strict interior local maxima above `fraction` of the peak.
std::vector<std::size_t> local_maxima(const CherResult& result, double fraction = 0.01);

/// `# backend=...,Bz_G=...,group=...,window=...,num_freqs=...,dt_us=...,num_times=...`,
/// `omega_rad_per_us,weight`,
/// rows, then `# negativity=...`.
void write_cher_csv(std::ostream& out, const CherResult& result);
void write_cher_csv(const std::filesystem::path& path, const CherResult& result);

/// Reads the weights and the negativity footer back.
CherResult read_cher_csv(const std::filesystem::path& path);

}  // namespace nvaqs::spectral

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
#include <span>
#include <string>
#include <vector>

#include "nvaqs/common.hpp"

namespace nvaqs {

struct SeriesMetadata {
  std::string backend = "analytic";
  double bz_gauss = 0.0;
  std::string group = "all";

  bool operator==(const SeriesMetadata&) const = default;
};

/// Complex dephasing factor sampled on a time grid. This is the exchange
/// format between backends, the group combiner and the spectral analysis.
struct DephasingSeries {
  std::vector<double> times;  // us
  std::vector<Complex> values;
  SeriesMetadata metadata;

  [[nodiscard]] std::size_t size() const { return times.size(); }

  /// Structural checks: equal lengths, strictly increasing finite times.
  void validate() const;

  /// Physical checks for exact backends: phi(0) = 1 and |phi| <= 1 within tol.
  void validate_physical(double tolerance) const;
};

/// Throws PreconditionError unless the grid is finite and strictly increasing.
void validate_time_grid(std::span<const double> times);

/// `count` evenly spaced points on [0, t_max]; the last point is exactly t_max.
std::vector<double> uniform_time_grid(double t_max, int count);

/// Shortest round-trip decimal form of a double.
std::string format_double(double value);

/// CSV: `# backend=...,Bz_G=...,group=...` then `t_us,re_phi,im_phi` and rows.
void write_series_csv(std::ostream& out, const DephasingSeries& series);
void write_series_csv(const std::filesystem::path& path, const DephasingSeries& series);
DephasingSeries read_series_csv(std::istream& in);
DephasingSeries read_series_csv(const std::filesystem::path& path);

}  // namespace nvaqs

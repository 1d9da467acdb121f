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

// Brute-force diamond lattice census: walks every conventional cell in a
// cube and counts the eight basis atoms by radius. Rotation invariance of
// |r| means no NV frame is needed.

#include <array>
#include <cmath>
#include <cstddef>

namespace oracle {

inline std::size_t count_diamond_sites(double a, double r_min, double r_max) {
  static constexpr std::array<std::array<int, 3>, 8> kBasis{{{0, 0, 0}, {0, 2, 2}, {2, 0, 2},
                                                            {2, 2, 0}, {1, 1, 1}, {1, 3, 3},
                                                            {3, 1, 3}, {3, 3, 1}}};
  const int cells = static_cast<int>(std::ceil(r_max / a)) + 1;
  std::size_t count = 0;
  for (int i = -cells; i <= cells; ++i) {
    for (int j = -cells; j <= cells; ++j) {
      for (int k = -cells; k <= cells; ++k) {
        for (const auto& b : kBasis) {
          const double x = a * (i + b[0] / 4.0);
          const double y = a * (j + b[1] / 4.0);
          const double z = a * (k + b[2] / 4.0);
          const double r = std::sqrt(x * x + y * y + z * z);
          if (r >= r_min && r <= r_max) ++count;
        }
      }
    }
  }
  return count;
}

}  // namespace oracle

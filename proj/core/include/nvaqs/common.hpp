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

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

namespace nvaqs {

using Complex = std::complex<double>;
using Vec3 = Eigen::Vector3d;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid input or violated precondition (bad spec, bad config, bad grid).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A request exceeds what a backend or container can hold.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// A simulation backend failed while producing a result.
class BackendError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing an artifact failed, or its contents are malformed.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Library version plus the `git describe` string captured at configure time.
std::string version_string();

}  // namespace nvaqs

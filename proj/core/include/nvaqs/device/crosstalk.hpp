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

#include <functional>
#include <string_view>

#include "nvaqs/device/profile.hpp"
#include "nvaqs/qsim/circuit.hpp"

namespace nvaqs::device {

/// Regroups the circuit into ASAP layers and appends, after each layer,
/// RZZ(j * tau) on every crosstalk pair whose two qubits both appear in the
/// circuit. Pairs with j * tau == 0 add nothing.
qsim::Circuit apply_crosstalk(const qsim::Circuit& circuit, const DeviceProfile& profile);

/// Follows each gate of nonzero CX cost c with a two-qubit depolarizing
/// channel of probability 1 - (1 - p)^c.
qsim::Circuit apply_gate_errors(const qsim::Circuit& circuit, double probability);

/// Placement, routing, crosstalk and gate errors for a group of `num_pairs`
/// pairs, compacted back so the logical layout is unchanged. Suitable as
/// qsim::RunOptions::transform.
std::function<qsim::Circuit(const qsim::Circuit&)> noisy_transform(const DeviceProfile& profile,
                                                                   std::string_view placement,
                                                                   int num_pairs);

}  // namespace nvaqs::device

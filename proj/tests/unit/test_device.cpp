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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <queue>
#include <random>
#include <set>

#include "dense.hpp"
#include "fixtures.hpp"
#include "nvaqs/device/crosstalk.hpp"
#include "nvaqs/device/profile.hpp"
#include "nvaqs/device/routing.hpp"
#include "nvaqs/device/sampling.hpp"
#include "nvaqs/qsim/aqs.hpp"

namespace nvaqs::device {
namespace {

using qsim::Circuit;

std::vector<Edge> line(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return edges;
}

std::vector<int> identity_map(int n) {
  std::vector<int> m(n);
  for (int i = 0; i < n; ++i) m[i] = i;
  return m;
}

TEST(Routing, ShortestPathTiesGoLow) {
  // Square 0-1-3, 0-2-3.
  std::vector<std::vector<int>> adj{{1, 2}, {0, 3}, {0, 3}, {1, 2}};
  EXPECT_EQ(shortest_path(adj, 0, 3), (std::vector<int>{0, 1, 3}));
  EXPECT_EQ(shortest_path(adj, 2, 2), (std::vector<int>{2}));
  std::vector<std::vector<int>> split{{1}, {0}, {}};
  EXPECT_THROW(shortest_path(split, 0, 2), PreconditionError);
}

TEST(Routing, AdjacentNeedsNoSwaps) {
  Circuit c{2, {qsim::cu(0, 1, 0.3, 0.1, 0.2, 0.4)}};
  const auto r = route_remote_cu(c, line(2), 2, identity_map(2));
  EXPECT_EQ(r.swaps_inserted, 0);
  EXPECT_EQ(r.cnot_count, 2);
  EXPECT_EQ(r.circuit.gates, c.gates);
}

TEST(Routing, ThreeHopsCostFourSwaps) {
  Circuit c{4, {qsim::cu(0, 3, 0.3, 0.1, 0.2, 0.4)}};
  const auto r = route_remote_cu(c, line(4), 4, identity_map(4));
  EXPECT_EQ(r.swaps_inserted, 4);
  EXPECT_EQ(r.cnot_count - 2, 12);
  ASSERT_EQ(r.circuit.gates.size(), 5u);
  EXPECT_EQ(r.circuit.gates[0], qsim::swap(0, 1));
  EXPECT_EQ(r.circuit.gates[1], qsim::swap(1, 2));
  EXPECT_EQ(r.circuit.gates[2].qubits, (std::array<int, 2>{2, 3}));
  EXPECT_EQ(r.circuit.gates[3], qsim::swap(1, 2));
  EXPECT_EQ(r.circuit.gates[4], qsim::swap(0, 1));
}

TEST(Routing, DisconnectedRejected) {
  Circuit c{3, {qsim::cx(0, 2)}};
  EXPECT_THROW(route_remote_cu(c, {{0, 1}}, 3, identity_map(3)), PreconditionError);
}

TEST(Routing, RoutedUnitaryEqualsOriginal) {
  std::mt19937_64 rng(50);
  // Star-free sparse graphs on five qubits.
  const std::vector<std::vector<Edge>> maps{line(5), {{0, 2}, {2, 4}, {4, 1}, {1, 3}},
                                            {{0, 1}, {1, 2}, {2, 3}, {1, 4}}};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& map = maps[trial % maps.size()];
    Circuit c{5, {}};
    for (int i = 0; i < 12; ++i) {
      const int a = static_cast<int>(rng() % 5);
      int b = static_cast<int>(rng() % 5);
      while (b == a) b = static_cast<int>(rng() % 5);
      const double x = fixture::uniform(rng, -3, 3);
      switch (rng() % 4) {
        case 0: c.gates.push_back(qsim::cu(a, b, x, 0.4 * x, -x, 0.2)); break;
        case 1: c.gates.push_back(qsim::cx(a, b)); break;
        case 2: c.gates.push_back(qsim::rzz(a, b, x)); break;
        default: c.gates.push_back(qsim::u(a, x, 1.0, -0.5)); break;
      }
    }
    std::vector<int> perm = identity_map(5);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto routed = route_remote_cu(c, map, 5, perm);
    const auto back = compact(routed.circuit, perm);
    const double diff =
        (oracle::circuit_unitary(back) - oracle::circuit_unitary(c)).cwiseAbs().maxCoeff();
    EXPECT_LT(diff, 1e-10);
  }
}

TEST(Routing, CounterIdentity) {
  const auto dev = heavy_hex_27();
  std::mt19937_64 rng(51);
  const auto group = qsim::make_group(fixture::random_sites(rng, 3), 100.0);
  const auto logical = qsim::build_aqs_circuit(group, 2.0);
  const auto map = dev.placement("", 3).logical_to_physical(3);
  const auto routed = route_remote_cu(logical, dev.coupling_map, dev.num_qubits, map);
  int n_cu = 0, n_cx = 0, n_swap = 0;
  for (const auto& g : routed.circuit.gates) {
    n_cu += g.kind == qsim::GateKind::kCU;
    n_cx += g.kind == qsim::GateKind::kCX;
    n_swap += g.kind == qsim::GateKind::kSwap;
  }
  EXPECT_EQ(n_swap, routed.swaps_inserted);
  EXPECT_EQ(routed.cnot_count, 3 * routed.swaps_inserted + 2 * n_cu + n_cx);
  EXPECT_EQ(routed.depth, static_cast<int>(routed.circuit.layers().size()));
}

TEST(Compact, LogicalIndicesKept) {
  Circuit phys{10, {qsim::cx(7, 3), qsim::swap(3, 9), qsim::h(5)}};
  const auto c = compact(phys, {7, 3});
  EXPECT_EQ(c.num_qubits, 4);
  EXPECT_EQ(c.gates[0], qsim::cx(0, 1));
  EXPECT_EQ(c.gates[1], qsim::swap(1, 3));
  EXPECT_EQ(c.gates[2], qsim::h(2));
  EXPECT_THROW(compact(phys, {1, 1}), PreconditionError);
}

DeviceProfile two_pair_line(double j, Edge pair) {
  DeviceProfile p;
  p.name = "line5";
  p.num_qubits = 5;
  p.coupling_map = {{0, 1}, {1, 2}, {0, 3}, {3, 4}};
  p.max_pairs = 2;
  p.crosstalk = {{pair, j, 1.0}};
  p.placements["only"] = {0, {{1, 2}, {3, 4}}};
  p.default_placement = "only";
  return p;
}

DephasingSeries run_noisy(const DeviceProfile& profile, std::string_view placement,
                          std::span<const bathgen::NuclearSite> sites, double bz) {
  qsim::RunOptions opts;
  opts.transform = noisy_transform(profile, placement, static_cast<int>(sites.size()));
  return qsim::run_group(qsim::make_group(sites, bz), uniform_time_grid(20.0, 41), opts);
}

double max_imag(const DephasingSeries& s) {
  double m = 0.0;
  for (auto v : s.values) m = std::max(m, std::abs(v.imag()));
  return m;
}

TEST(Crosstalk, ZeroStrengthLeavesCircuitUnchanged) {
  const auto profile = two_pair_line(0.0, {1, 3});
  Circuit c{5, {qsim::h(0), qsim::cx(0, 1), qsim::cx(1, 3)}};
  EXPECT_EQ(apply_crosstalk(c, profile).gates, c.gates);
}

TEST(Crosstalk, KicksFollowEveryLayer) {
  const auto profile = two_pair_line(0.3, {0, 1});
  Circuit c{3, {qsim::h(0), qsim::h(2), qsim::cx(0, 1)}};
  const auto out = apply_crosstalk(c, profile);
  ASSERT_EQ(out.gates.size(), 5u);
  EXPECT_EQ(out.gates[2], qsim::rzz(0, 1, 0.3));
  EXPECT_EQ(out.gates[4], qsim::rzz(0, 1, 0.3));
  // Pair with an idle qubit is skipped.
  Circuit idle{5, {qsim::h(0), qsim::h(2)}};
  EXPECT_EQ(apply_crosstalk(idle, profile).gates, idle.gates);
}

TEST(Crosstalk, NucleusNucleusKickInvisibleOnUnpolarizedBath) {
  std::mt19937_64 rng(52);
  const auto sites = fixture::random_sites(rng, 2, false);
  // Logical nuclei sit on physical 1 and 3.
  const auto noisy = run_noisy(two_pair_line(0.5, {1, 3}), "only", sites, 100.0);
  const auto ideal = physics::dephasing_factor_analytic(sites, 100.0, noisy.times);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    EXPECT_NEAR(std::abs(noisy.values[i] - ideal.values[i]), 0.0, 1e-12);
  }
}

TEST(Crosstalk, ElectronAncillaKickCreatesImaginaryPart) {
  std::mt19937_64 rng(53);
  const auto sites = fixture::random_sites(rng, 2, false);
  const auto noisy = run_noisy(two_pair_line(0.5, {0, 4}), "only", sites, 100.0);
  EXPECT_EQ(max_imag(physics::dephasing_factor_analytic(sites, 100.0, noisy.times)), 0.0);
  EXPECT_GT(max_imag(noisy), 1e-8);
}

TEST(Crosstalk, LeftRightPlacementMatchesIdeal) {
  std::mt19937_64 rng(54);
  const auto sites = fixture::random_sites(rng, 2, false);
  const auto noisy = run_noisy(heavy_hex_27(), "left_right", sites, 100.0);
  const auto ideal = physics::dephasing_factor_analytic(sites, 100.0, noisy.times);
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    EXPECT_NEAR(std::abs(noisy.values[i] - ideal.values[i]), 0.0, 1e-12);
  }
  EXPECT_GT(max_imag(run_noisy(heavy_hex_27(), "top_right", sites, 100.0)), 1e-3);
}

TEST(Crosstalk, ZeroStrengthNoisyIsBitIdenticalToExact) {
  auto profile = heavy_hex_27();
  for (auto& c : profile.crosstalk) c.j = 0.0;
  std::mt19937_64 rng(55);
  const auto sites = fixture::random_sites(rng, 2);
  const auto times = uniform_time_grid(20.0, 41);
  qsim::RunOptions opts;
  opts.transform = noisy_transform(profile, "top_right", 2);
  const auto noisy = qsim::run_group(qsim::make_group(sites, 100.0), times, opts);
  const auto exact = qsim::run_group(qsim::make_group(sites, 100.0), times);
  EXPECT_EQ(noisy.values, exact.values);
}

TEST(GateErrors, ChannelProbabilityScalesWithCost) {
  Circuit c{3, {qsim::h(0), qsim::cx(0, 1), qsim::cu(1, 2, 0.1, 0, 0, 0), qsim::swap(0, 2)}};
  const auto out = apply_gate_errors(c, 0.1);
  ASSERT_EQ(out.gates.size(), 7u);
  EXPECT_NEAR(out.gates[2].params[0], 0.1, 1e-15);
  EXPECT_NEAR(out.gates[4].params[0], 1 - 0.9 * 0.9, 1e-15);
  EXPECT_NEAR(out.gates[6].params[0], 1 - 0.9 * 0.9 * 0.9, 1e-15);
  EXPECT_EQ(apply_gate_errors(c, 0.0).gates, c.gates);
  EXPECT_THROW(apply_gate_errors(c, 1.5), PreconditionError);
}

TEST(GateErrors, TrajectoriesShrinkCoherence) {
  auto profile = heavy_hex_27();
  profile.crosstalk.clear();
  profile.gate_error = 0.05;
  std::mt19937_64 rng(56);
  const auto sites = fixture::random_sites(rng, 2, false);
  const std::vector<double> times{0.0, 5.0};
  qsim::RunOptions opts;
  opts.transform = noisy_transform(profile, "left_right", 2);
  opts.trajectories = 200;
  opts.seed = 9;
  const auto a = qsim::run_group(qsim::make_group(sites, 100.0), times, opts);
  const auto b = qsim::run_group(qsim::make_group(sites, 100.0), times, opts);
  EXPECT_EQ(a.values, b.values);
  EXPECT_LT(std::abs(a.values[0]), 0.99);
}

TEST(Sampling, PlusStateInXIsAllPlus) {
  qsim::QuantumState s(1);
  s.apply(qsim::h(0));
  Rng rng(1);
  const auto counts = device::sample_shots(s, Basis::kX, 0, 1000, rng);
  EXPECT_EQ(counts.n_plus, 1000);
  EXPECT_EQ(counts.n_minus, 0);
}

TEST(Sampling, ZeroStateInXIsFair) {
  qsim::QuantumState s(1);
  Rng rng(2);
  const auto counts = device::sample_shots(s, Basis::kX, 0, 10000, rng);
  EXPECT_EQ(counts.n_plus + counts.n_minus, 10000);
  EXPECT_NEAR(counts.n_plus / 10000.0, 0.5, 3 * 0.5 / 100.0);
}

TEST(Sampling, SeededRepeatIsIdentical) {
  qsim::QuantumState s(2);
  s.apply(qsim::u(1, 1.1, 0.3, 0.0));
  Rng a(77), b(77);
  const auto ca = device::sample_shots(s, Basis::kY, 1, 5000, a);
  const auto cb = device::sample_shots(s, Basis::kY, 1, 5000, b);
  EXPECT_EQ(ca.n_plus, cb.n_plus);
  EXPECT_EQ(ca.n_minus, cb.n_minus);
}

TEST(Sampling, ThreeSigmaBound) {
  EXPECT_NEAR(three_sigma_bound(0.0, 4096), 3.0 / 64.0, 1e-15);
  EXPECT_EQ(three_sigma_bound(1.0, 100), 0.0);
}

TEST(Profiles, JsonRoundTrip) {
  for (const auto& name : builtin_profile_names()) {
    const auto p = builtin_profile(name);
    EXPECT_EQ(profile_from_json(profile_to_json(p)), p) << name;
  }
  EXPECT_THROW(builtin_profile("nope"), PreconditionError);
}

TEST(Profiles, ShippedFilesMatchBuiltins) {
  for (const auto& name : builtin_profile_names()) {
    const auto file = load_profile(std::filesystem::path(NVAQS_PROFILE_DIR) / (name + ".json"));
    EXPECT_EQ(file, builtin_profile(name)) << name;
  }
}

TEST(Profiles, ResolveByNameOrPath) {
  EXPECT_EQ(resolve_profile("heavy_hex_27"), heavy_hex_27());
  EXPECT_EQ(resolve_profile(std::string(NVAQS_PROFILE_DIR) + "/ideal_simulator.json"),
            ideal_simulator());
  EXPECT_THROW(resolve_profile("/no/such/profile.json"), Error);
}

void expect_heavy_hex_graph(const DeviceProfile& p, std::size_t edges) {
  EXPECT_EQ(p.coupling_map.size(), edges);
  const auto adj = p.adjacency();
  std::size_t max_degree = 0;
  for (const auto& n : adj) max_degree = std::max(max_degree, n.size());
  EXPECT_EQ(max_degree, 3u);
  std::vector<bool> seen(adj.size(), false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 1;
  while (!q.empty()) {
    const int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        q.push(w);
      }
    }
  }
  EXPECT_EQ(reached, p.num_qubits);
}

TEST(Profiles, HeavyHexGraphs) {
  expect_heavy_hex_graph(heavy_hex_27(), 28);
  expect_heavy_hex_graph(heavy_hex_127(), 144);
  EXPECT_EQ(heavy_hex_127().num_qubits, 127);
}

TEST(Profiles, PairStudyPlacements) {
  const auto p = heavy_hex_27();
  for (const char* name : {"left_right", "top_left", "top_right"}) {
    const auto pl = p.placement(name, 2);
    EXPECT_EQ(pl.pairs.size(), 2u);
    const auto adj = p.adjacency();
    for (const auto& pair : pl.pairs) {
      EXPECT_TRUE(std::ranges::count(adj[pair[0]], pair[1]) == 1) << name;
    }
  }
  EXPECT_THROW(p.placement("left_right", 3), PreconditionError);
  EXPECT_THROW(p.placement("sideways", 1), PreconditionError);
}

TEST(Profiles, AutoPlacementIsValid) {
  const auto p = heavy_hex_127();
  for (int pairs = 1; pairs <= 3; ++pairs) {
    const auto pl = auto_placement(p, pairs);
    ASSERT_EQ(static_cast<int>(pl.pairs.size()), pairs);
    std::set<int> used{pl.electron};
    const auto adj = p.adjacency();
    for (const auto& pair : pl.pairs) {
      EXPECT_TRUE(used.insert(pair[0]).second);
      EXPECT_TRUE(used.insert(pair[1]).second);
      EXPECT_EQ(std::ranges::count(adj[pair[0]], pair[1]), 1);
    }
  }
}

TEST(Profiles, ValidationRejectsBadProfiles) {
  auto p = heavy_hex_27();
  p.coupling_map.push_back({0, 99});
  EXPECT_THROW(p.validate(), PreconditionError);
  p = heavy_hex_27();
  p.max_pairs = 0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = heavy_hex_27();
  p.gate_error = 2.0;
  EXPECT_THROW(p.validate(), PreconditionError);
  p = heavy_hex_27();
  p.placements["bad"] = {40, {}};
  EXPECT_THROW(p.validate(), PreconditionError);
}

}  // namespace
}  // namespace nvaqs::device

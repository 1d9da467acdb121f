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

#include <random>

#include "fixtures.hpp"
#include "nvaqs/device/profile.hpp"
#include "nvaqs/io.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/planner.hpp"

namespace nvaqs::planner {
namespace {

bathgen::BathConfiguration golden_bath() {
  return io::load_bath(std::filesystem::path(NVAQS_GOLDEN_DIR) / "default_bath.json");
}

bathgen::BathConfiguration synthetic_bath(int n, int inner) {
  bathgen::BathConfiguration bath;
  for (int k = 0; k < n; ++k) {
    const double d = k < inner ? 0.6 + 0.01 * k : 1.5 + 0.01 * k;
    bath.sites.push_back({k, Vec3(0.3 * d, 0.4 * d, std::sqrt(0.75) * d), d, Vec3::Zero()});
  }
  return bath;
}

std::vector<int> sizes(const PartitionPlan& plan) {
  std::vector<int> out;
  for (const auto& g : plan.groups) out.push_back(static_cast<int>(g.nuclei.size()));
  return out;
}

TEST(Partition, DefaultBathShape) {
  const auto bath = golden_bath();
  ASSERT_EQ(bath.inner_count(), 10);
  const auto plan = partition_bath(bath, device::heavy_hex_27(), device::ideal_simulator());
  ASSERT_EQ(plan.groups.size(), 55u);
  const auto s = sizes(plan);
  EXPECT_EQ(std::vector<int>(s.begin(), s.begin() + 4), (std::vector<int>{3, 3, 3, 1}));
  for (std::size_t g = 4; g < s.size(); ++g) EXPECT_EQ(s[g], 10);
  for (std::size_t g = 0; g < 4; ++g) {
    EXPECT_EQ(plan.groups[g].profile, "heavy_hex_27");
    EXPECT_EQ(plan.groups[g].qubits, 1 + 2 * s[g]);
  }
  EXPECT_EQ(plan.groups.back().profile, "ideal_simulator");
  EXPECT_EQ(plan.groups.back().qubits, 21);
}

TEST(Partition, NoInnerNuclei) {
  const auto plan =
      partition_bath(synthetic_bath(25, 0), device::heavy_hex_27(), device::ideal_simulator());
  EXPECT_EQ(sizes(plan), (std::vector<int>{10, 10, 5}));
}

TEST(Partition, SingleNucleus) {
  const auto plan =
      partition_bath(synthetic_bath(1, 1), device::heavy_hex_27(), device::ideal_simulator());
  ASSERT_EQ(plan.groups.size(), 1u);
  EXPECT_EQ(plan.groups[0].nuclei, std::vector<int>{0});
  EXPECT_EQ(plan.groups[0].profile, "heavy_hex_27");
}

TEST(Partition, UnsortedBathRejected) {
  auto bath = synthetic_bath(4, 2);
  std::swap(bath.sites[0].distance, bath.sites[3].distance);
  EXPECT_THROW(partition_bath(bath, device::heavy_hex_27(), device::ideal_simulator()),
               PreconditionError);
}

TEST(Partition, IsDeterministic) {
  const auto bath = golden_bath();
  EXPECT_EQ(partition_bath(bath, device::heavy_hex_27(), device::ideal_simulator()),
            partition_bath(bath, device::heavy_hex_27(), device::ideal_simulator()));
}

TEST(Partition, ValidateCatchesDefects) {
  const auto bath = synthetic_bath(4, 0);
  PartitionPlan plan{{{{0, 1}, "x", 5, true}, {{1, 2, 3}, "x", 7, true}}};
  EXPECT_THROW(plan.validate(bath), PreconditionError);
  plan = {{{{0, 1}, "x", 5, true}, {{2}, "x", 3, true}}};
  EXPECT_THROW(plan.validate(bath), PreconditionError);
  plan = {{{{0, 1}, "x", 4, true}, {{2, 3}, "x", 5, true}}};
  EXPECT_THROW(plan.validate(bath), PreconditionError);
  plan = {{{{0, 1}, "x", 5, true}, {{2, 3}, "x", 5, true}}};
  EXPECT_NO_THROW(plan.validate(bath));
  auto polarized = bath;
  polarized.sites[0].polarization = {0, 0, 1};
  plan.groups[0].controllable = false;
  EXPECT_THROW(plan.validate(polarized), PreconditionError);
}

TEST(PackUniform, Sizes) {
  const auto bath = synthetic_bath(23, 0);
  EXPECT_EQ(sizes(pack_uniform(bath, 3, device::ideal_simulator())),
            (std::vector<int>{3, 3, 3, 3, 3, 3, 3, 2}));
  EXPECT_EQ(sizes(pack_uniform(bath, 30, device::ideal_simulator())), std::vector<int>{23});
  EXPECT_THROW(pack_uniform(bath, 0, device::ideal_simulator()), PreconditionError);
}

DephasingSeries constant(std::vector<double> t, Complex v, std::string group,
                         std::string backend = "analytic") {
  DephasingSeries s;
  s.times = std::move(t);
  s.values.assign(s.times.size(), v);
  s.metadata = {backend, 100.0, std::move(group)};
  return s;
}

TEST(Combine, PointwiseProduct) {
  const std::vector<DephasingSeries> parts{constant({0, 1}, {0.5, 0.5}, "g0"),
                                           constant({0, 1}, {0.0, 2.0}, "g1")};
  const auto out = combine_groups(parts);
  EXPECT_EQ(out.values[1], Complex(-1.0, 1.0));
  EXPECT_EQ(out.metadata.group, "g0+g1");
  EXPECT_EQ(out.metadata.backend, "analytic");
}

TEST(Combine, SingleSeriesIsIdentity) {
  const std::vector<DephasingSeries> parts{constant({0, 1, 2}, {0.3, -0.1}, "g0")};
  EXPECT_EQ(combine_groups(parts).values, parts[0].values);
}

TEST(Combine, MixedBackends) {
  const std::vector<DephasingSeries> parts{constant({0, 1}, 1.0, "a", "noisy"),
                                           constant({0, 1}, 1.0, "b", "analytic")};
  EXPECT_EQ(combine_groups(parts).metadata.backend, "mixed");
}

TEST(Combine, Errors) {
  EXPECT_THROW(combine_groups(std::span<const DephasingSeries>{}), PreconditionError);
  const std::vector<DephasingSeries> parts{constant({0, 1}, 1.0, "a"),
                                           constant({0, 1.5}, 1.0, "b")};
  EXPECT_THROW(combine_groups(parts), PreconditionError);
}

TEST(Combine, PartitionIsLossless) {
  std::mt19937_64 rng(60);
  const auto sites = fixture::random_sites(rng, 17);
  bathgen::BathConfiguration bath;
  bath.sites = sites;
  const auto times = uniform_time_grid(20.0, 51);
  const auto whole = physics::dephasing_factor_analytic(sites, 100.0, times);
  for (int size : {1, 3, 5, 17}) {
    const auto plan = pack_uniform(bath, size, device::ideal_simulator());
    std::vector<DephasingSeries> parts;
    for (const auto& g : plan.groups) {
      parts.push_back(physics::dephasing_factor_analytic(group_sites(bath, g), 100.0, times));
    }
    const auto combined = combine_groups(parts);
    for (std::size_t i = 0; i < times.size(); ++i) {
      EXPECT_NEAR(std::abs(combined.values[i] - whole.values[i]), 0.0, 1e-12);
    }
  }
}

TEST(PlanJson, RoundTrip) {
  const auto plan =
      partition_bath(golden_bath(), device::heavy_hex_27(), device::ideal_simulator());
  EXPECT_EQ(plan_from_json(plan_to_json(plan)), plan);
  EXPECT_THROW(plan_from_json(nlohmann::json{{"groups", {{{"nuclei", "x"}}}}}),
               PreconditionError);
}

}  // namespace
}  // namespace nvaqs::planner

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

#include <benchmark/benchmark.h>

#include <random>

#include "nvaqs/bathgen.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/qsim/aqs.hpp"
#include "nvaqs/qsim/state.hpp"
#include "nvaqs/spectral.hpp"

namespace {

using namespace nvaqs;

const bathgen::BathConfiguration& bath() {
  static const auto b = bathgen::assign_polarizations(bathgen::generate_bath({}), {1, 0, 0});
  return b;
}

void BM_SingleQubitGate(benchmark::State& state) {
  qsim::QuantumState s(static_cast<int>(state.range(0)));
  const auto g = qsim::u(3, 0.4, 0.2, 0.1);
  for (auto _ : state) {
    s.apply(g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_SingleQubitGate)->Arg(13)->Arg(21);

void BM_ControlledU(benchmark::State& state) {
  qsim::QuantumState s(static_cast<int>(state.range(0)));
  const auto g = qsim::cu(0, 5, 0.4, 0.2, 0.1, 0.3);
  for (auto _ : state) {
    s.apply(g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ControlledU)->Arg(13)->Arg(21);

void BM_AqsTimePoint(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const std::vector<bathgen::NuclearSite> sites(bath().sites.begin(), bath().sites.begin() + n);
  const auto group = qsim::make_group(sites, 100.0);
  const std::vector<double> t{7.5};
  for (auto _ : state) {
    benchmark::DoNotOptimize(qsim::run_group(group, t));
  }
}
BENCHMARK(BM_AqsTimePoint)->Arg(3)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_AnalyticFullBath(benchmark::State& state) {
  const auto times = uniform_time_grid(20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(physics::dephasing_factor_analytic(bath().sites, 100.0, times,
                                                                physics::PhysicalConstants::standard(), 1));
  }
}
BENCHMARK(BM_AnalyticFullBath)->Arg(401)->Unit(benchmark::kMillisecond);

void BM_Cher(benchmark::State& state) {
  const auto series = physics::dephasing_factor_analytic(bath().sites, 100.0,
                                                         uniform_time_grid(20.0, 401));
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(spectral::cher(series, m));
  }
}
BENCHMARK(BM_Cher)->Arg(1024)->Arg(2048)->Unit(benchmark::kMillisecond);

void BM_GenerateBath(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bathgen::generate_bath({}));
  }
}
BENCHMARK(BM_GenerateBath)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();

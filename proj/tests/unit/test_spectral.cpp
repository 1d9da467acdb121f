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
#include <fstream>
#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "nvaqs/physics.hpp"
#include "nvaqs/spectral.hpp"

namespace nvaqs::spectral {
namespace {

DephasingSeries sampled(double t_max, int n, const std::function<Complex(double)>& f) {
  DephasingSeries s;
  s.times = uniform_time_grid(t_max, n);
  for (double t : s.times) s.values.push_back(f(t));
  return s;
}

std::size_t argmax(const std::vector<double>& w) {
  return static_cast<std::size_t>(std::max_element(w.begin(), w.end()) - w.begin());
}

TEST(Cher, ConstantSeriesPeaksAtZero) {
  const auto r = cher(sampled(20.0, 201, [](double) { return Complex(1.0, 0.0); }));
  ASSERT_EQ(r.omegas.size(), 2048u);
  EXPECT_EQ(r.omegas[argmax(r.weights)], 0.0);
  EXPECT_NEAR(r.weights[1024], 20.0 / M_PI, 1e-12);
  EXPECT_NEAR(total_weight(r), 1.0, 1e-12);
}

TEST(Cher, FrequencyGrid) {
  const auto r = cher(sampled(10.0, 101, [](double) { return Complex(1.0, 0.0); }), 512);
  EXPECT_NEAR(r.d_omega, 2 * M_PI / (512 * 0.1), 1e-15);
  EXPECT_NEAR(r.omegas.front(), -256 * r.d_omega, 1e-12);
  EXPECT_NEAR(r.omegas.back(), 255 * r.d_omega, 1e-12);
  EXPECT_EQ(r.dt, 0.1);
  EXPECT_EQ(r.num_times, 101);
}

TEST(Cher, CosineGivesTwoSymmetricPeaks) {
  const int m = 2048;
  const double dt = 0.05;
  const double w0 = 100 * 2 * M_PI / (m * dt);
  const auto r = cher(sampled(20.0, 401, [&](double t) { return Complex(std::cos(w0 * t), 0); }), m);
  auto peaks = local_maxima(r, 0.5);
  ASSERT_EQ(peaks.size(), 2u);
  EXPECT_NEAR(r.omegas[peaks[0]], -w0, 1e-9);
  EXPECT_NEAR(r.omegas[peaks[1]], w0, 1e-9);
  EXPECT_NEAR(r.weights[peaks[0]], r.weights[peaks[1]], 1e-12);
}

TEST(Cher, NormalizationEqualsPhiZero) {
  std::mt19937_64 rng(70);
  const auto sites = fixture::random_sites(rng, 12);
  const auto s = physics::dephasing_factor_analytic(sites, 100.0, uniform_time_grid(20.0, 401));
  EXPECT_NEAR(total_weight(cher(s)), 1.0, 1e-12);
}

TEST(Cher, RoundTripRecoversSeries) {
  std::mt19937_64 rng(71);
  for (double bz : {50.0, 200.0}) {
    const auto sites = fixture::random_sites(rng, 8);
    const auto s = physics::dephasing_factor_analytic(sites, bz, uniform_time_grid(20.0, 401));
    const auto back = reconstruct_series(cher(s));
    ASSERT_EQ(back.size(), s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      EXPECT_NEAR(back.times[i], s.times[i], 1e-12);
      EXPECT_NEAR(std::abs(back.values[i] - s.values[i]), 0.0, 1e-6);
    }
  }
}

TEST(Cher, WindowIsAppliedBeforeTransform) {
  const auto s = sampled(20.0, 201, [](double t) { return std::polar(1.0, 0.3 * t); });
  const auto r = cher(s, 2048, Window::gaussian(5.0));
  EXPECT_EQ(r.window.label(), "gaussian(5)");
  const auto back = reconstruct_series(r);
  for (std::size_t i = 1; i < s.size(); ++i) {
    const double g = std::exp(-0.5 * s.times[i] * s.times[i] / 25.0);
    EXPECT_NEAR(std::abs(back.values[i] - g * s.values[i]), 0.0, 1e-9);
  }
  EXPECT_THROW(cher(s, 2048, Window::gaussian(0.0)), PreconditionError);
}

TEST(Cher, ImaginaryResidueStaysSmall) {
  std::mt19937_64 rng(72);
  const auto sites = fixture::random_sites(rng, 6);
  const auto s = physics::dephasing_factor_analytic(sites, 100.0, uniform_time_grid(20.0, 401));
  EXPECT_LE(cher(s).max_imag_residue, 1e-10);
}

TEST(Cher, ClassicalBathHasNoNegativity) {
  std::mt19937_64 rng(73);
  const auto sites = fixture::random_sites(rng, 10, false);
  const auto s = physics::dephasing_factor_analytic(sites, 100.0, uniform_time_grid(40.0, 801));
  const auto r = cher(s, 4096, Window::gaussian(10.0));
  EXPECT_LT(r.negativity, 1e-3);
}

TEST(Cher, InputErrors) {
  auto s = sampled(1.0, 11, [](double) { return Complex(1.0, 0.0); });
  EXPECT_THROW(cher(s, 7), PreconditionError);
  EXPECT_THROW(cher(s, 0), PreconditionError);
  EXPECT_THROW(cher(s, 64, Window::none(), 100.0), PreconditionError);
  EXPECT_NO_THROW(cher(s, 64, Window::none(), 30.0));
  auto shifted = s;
  for (auto& t : shifted.times) t += 1.0;
  EXPECT_THROW(cher(shifted), PreconditionError);
  auto uneven = s;
  uneven.times[3] += 0.02;
  EXPECT_THROW(cher(uneven), PreconditionError);
  EXPECT_THROW(cher(sampled(1.0, 1, [](double) { return Complex(1.0, 0.0); })), PreconditionError);
}

TEST(Negativity, Arithmetic) {
  CherResult r;
  r.omegas = {-1.0, -0.5, 0.0, 0.5};
  r.weights = {0.2, -0.1, 1.0, 0.0};
  r.d_omega = 0.5;
  EXPECT_NEAR(negativity(r), 0.05, 1e-15);
  EXPECT_NEAR(total_weight(r), 0.55, 1e-15);
}

TEST(LocalMaxima, ThresholdAndInterior) {
  CherResult r;
  r.weights = {5.0, 1.0, 2.0, 1.0, 0.005, 0.009, 0.001, 3.0};
  EXPECT_EQ(local_maxima(r), (std::vector<std::size_t>{2}));
  EXPECT_EQ(local_maxima(r, 0.001), (std::vector<std::size_t>{2, 5}));
}

TEST(CherCsv, RoundTripAndFooter) {
  auto s = sampled(5.0, 51, [](double t) { return Complex(std::exp(-0.1 * t), 0.0); });
  s.metadata = {"analytic", 200.0, "all"};
  const auto r = cher(s, 256);
  std::ostringstream out;
  write_cher_csv(out, r);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("# backend=analytic,Bz_G=200,group=all,window=none,num_freqs=256,", 0), 0u);
  EXPECT_NE(text.find("\nomega_rad_per_us,weight\n"), std::string::npos);
  const auto path = std::filesystem::temp_directory_path() / "nvaqs_cher_test.csv";
  write_cher_csv(path, r);
  const auto back = read_cher_csv(path);
  EXPECT_EQ(back.weights, r.weights);
  EXPECT_EQ(back.omegas, r.omegas);
  EXPECT_EQ(back.negativity, r.negativity);
  EXPECT_EQ(back.dt, r.dt);
  EXPECT_EQ(back.num_times, r.num_times);
  std::filesystem::remove(path);
}

TEST(CherCsv, MalformedRejected) {
  const auto path = std::filesystem::temp_directory_path() / "nvaqs_cher_bad.csv";
  {
    std::ofstream f(path);
    f << "# backend=x\nomega_rad_per_us,weight\n1,2\n";
  }
  EXPECT_THROW(read_cher_csv(path), IoError);
  {
    std::ofstream f(path);
    f << "omega_rad_per_us,weight\n1,abc\n# negativity=0\n";
  }
  EXPECT_THROW(read_cher_csv(path), IoError);
  std::filesystem::remove(path);
  EXPECT_THROW(read_cher_csv(path), IoError);
}

}  // namespace
}  // namespace nvaqs::spectral

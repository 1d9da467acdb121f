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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;

int run_cli(const std::string& args) {
  const std::string cmd = std::string(NVAQS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("nvaqs_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, BathHasTenInnerNucleiAndManifest) {
  ASSERT_EQ(run_cli("bath --out " + dir_.string()), 0);
  const auto bath = nlohmann::json::parse(slurp(dir_ / "bath.json"));
  ASSERT_EQ(bath.at("sites").size(), 520u);
  int inner = 0;
  for (const auto& s : bath.at("sites")) {
    const auto r = s.at("r");
    const double d = std::sqrt(double(r[0]) * double(r[0]) + double(r[1]) * double(r[1]) +
                               double(r[2]) * double(r[2]));
    inner += d < 1.0;
  }
  EXPECT_EQ(inner, 10);
  const auto manifest = nlohmann::json::parse(slurp(dir_ / "manifest.json"));
  EXPECT_EQ(manifest.at("command"), "bath");
}

TEST_F(Cli, SameSeedSameBytes) {
  ASSERT_EQ(run_cli("bath --seed 5 --out " + (dir_ / "a").string()), 0);
  ASSERT_EQ(run_cli("bath --seed 5 --out " + (dir_ / "b").string()), 0);
  ASSERT_EQ(run_cli("bath --seed 6 --out " + (dir_ / "c").string()), 0);
  EXPECT_EQ(slurp(dir_ / "a" / "bath.json"), slurp(dir_ / "b" / "bath.json"));
  EXPECT_NE(slurp(dir_ / "a" / "bath.json"), slurp(dir_ / "c" / "bath.json"));
}

TEST_F(Cli, RunCreatesNestedOutputAndCherFooter) {
  const auto out = dir_ / "deep" / "er";
  ASSERT_EQ(run_cli("run --bath " + std::string(NVAQS_GOLDEN_DIR) +
                    "/default_bath.json --tsteps 101 --out " + out.string()),
            0);
  const auto combined = out / "series_bz100_combined.csv";
  ASSERT_TRUE(fs::exists(combined));
  EXPECT_TRUE(fs::exists(out / "plan.json"));
  EXPECT_TRUE(fs::exists(out / "manifest.json"));
  ASSERT_EQ(run_cli("cher " + combined.string() + " --out " + out.string()), 0);
  const auto text = slurp(out / "series_bz100_combined_cher.csv");
  EXPECT_NE(text.find("# negativity="), std::string::npos);
  EXPECT_NE(text.find("omega_rad_per_us,weight"), std::string::npos);
}

TEST_F(Cli, ConfigErrorsExitTwo) {
  EXPECT_EQ(run_cli("bath --bz abc --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("run --pol y --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("run --backend gpu --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("figure fig9 --out " + dir_.string()), 2);
  EXPECT_EQ(run_cli("--no-such-flag"), 2);
}

TEST_F(Cli, IoErrorsExitFour) {
  EXPECT_EQ(run_cli("cher /no/such/series.csv -o " + (dir_ / "x.csv").string()), 4);
  fs::create_directories(dir_);
  std::ofstream(dir_ / "bad.json") << "{not json";
  EXPECT_EQ(run_cli("run --bath " + (dir_ / "bad.json").string() + " --out " + dir_.string()), 4);
}

TEST_F(Cli, CapacityErrorExitsThree) {
  auto profile = nlohmann::json::parse(slurp(fs::path(NVAQS_PROFILE_DIR) / "ideal_simulator.json"));
  profile["name"] = "wide_simulator";
  profile["num_qubits"] = 25;
  profile["max_pairs"] = 12;
  profile["placements"] = nlohmann::json::object();
  profile["default_placement"] = "";
  fs::create_directories(dir_);
  std::ofstream(dir_ / "wide.json") << profile.dump();
  EXPECT_EQ(run_cli("run --bath " + std::string(NVAQS_GOLDEN_DIR) +
                    "/default_bath.json --sim-backend exact-circuit --sim-profile " +
                    (dir_ / "wide.json").string() + " --tsteps 3 --out " + dir_.string()),
            3);
}

}  // namespace

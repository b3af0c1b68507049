// Copyright 2026 The entcorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

namespace entcorr::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "entcorr");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) {
    if (l == line) return true;
  }
  return false;
}

std::size_t count_lines(const std::string& text) {
  return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n'));
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("entcorr_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(CliTest, PointSeparableActivation) {
  const auto r = invoke({"point", "--tau", "0.75", "--at-eb", "--g", "6", "--gp", "-6"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(has_line(r.out, "env_class,Separable")) << r.out;
  EXPECT_TRUE(has_line(r.out, "omega,7"));
  EXPECT_TRUE(has_line(r.out, "direct_eps,0.25"));
  EXPECT_TRUE(has_line(r.out, "swap_eps,0.333333333"));
  EXPECT_TRUE(has_line(r.out, "direct_activation,Distillable"));
  EXPECT_TRUE(has_line(r.out, "swap_activation,Distillable"));
}

TEST_F(CliTest, PointMemoryless) {
  const auto r = invoke({"point", "--tau", "0.5", "--at-eb", "--g", "0", "--gp", "0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(has_line(r.out, "direct_eps,1.5"));
  EXPECT_TRUE(has_line(r.out, "swap_eps,3"));
  EXPECT_TRUE(has_line(r.out, "direct_activation,None"));
  EXPECT_TRUE(has_line(r.out, "swap_activation,None"));
}

TEST_F(CliTest, PointFiniteMu) {
  const auto r = invoke({"point", "--tau", "0.75", "--omega", "7", "--g", "6", "--gp", "-6", "--mu", "1e6"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(has_line(r.out, "direct_eps_finite,0.250000375")) << r.out;
}

TEST_F(CliTest, PointJson) {
  const auto r = invoke({"point", "--tau", "0.75", "--at-eb", "--g", "4", "--gp", "-4", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("env_class"), "Separable");
  EXPECT_DOUBLE_EQ(j.at("direct_eps").get<double>(), 0.75);
  EXPECT_EQ(j.at("direct_activation"), "Entangling");
  EXPECT_EQ(j.at("bona_fide"), true);
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({"point", "--tau", "0.5", "--omega", "0.5", "--g", "0", "--gp", "0"}).code, kUsage);
  EXPECT_EQ(invoke({"point", "--tau", "0.5", "--omega", "2", "--g", "1.9", "--gp", "1.9"}).code, kDomain);
  EXPECT_EQ(invoke({"point", "--omega", "2"}).code, kUsage);
  EXPECT_EQ(invoke({"point", "--tau", "0.5", "--omega", "3", "--at-eb"}).code, kUsage);
  EXPECT_EQ(invoke({"bogus"}).code, kUsage);
  EXPECT_EQ(invoke({}).code, kUsage);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
  EXPECT_EQ(invoke({"scan", "--tau", "0.5", "--at-eb", "--protocol", "nope"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--tau", "0.5", "--at-eb", "--resolution", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"converge", "--tau", "1"}).code, kUsage);
  EXPECT_EQ(invoke({"scan", "--tau", "0.5", "--at-eb", "--resolution", "3", "-o",
                    (dir_ / "missing" / "out.csv").string()})
                .code,
            kIo);
}

TEST_F(CliTest, NonBonaFideNamesCondition) {
  const auto r = invoke({"point", "--tau", "0.5", "--omega", "2", "--g", "1.9", "--gp", "1.9"});
  EXPECT_EQ(r.code, kDomain);
  EXPECT_TRUE(has_line(r.out, "violated_condition,omega^2 + g g' - 1 >= omega |g + g'|")) << r.out;
  EXPECT_TRUE(has_line(r.out, "env_class,Forbidden"));
  EXPECT_FALSE(r.err.empty());
}

TEST_F(CliTest, MinimalScan) {
  const auto r = invoke({"scan", "--tau", "0.5", "--at-eb", "--resolution", "2"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(count_lines(r.out), 5u);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "g,gp,env_class,activation,eps");
}

TEST_F(CliTest, ScanIsByteIdenticalAcrossThreadCounts) {
  for (const std::string format : {"csv", "json"}) {
    std::vector<std::string> outputs;
    for (const std::string threads : {"1", "3", "8"}) {
      const auto path = dir_ / ("scan_" + threads + "." + format);
      const auto r = invoke({"scan", "--tau", "0.75", "--at-eb", "--protocol", "swap", "--resolution", "61",
                             "--threads", threads, "--format", format, "-o", path.string()});
      ASSERT_EQ(r.code, kOk) << r.err;
      outputs.push_back(slurp(path));
    }
    EXPECT_FALSE(outputs[0].empty());
    EXPECT_EQ(outputs[0], outputs[1]);
    EXPECT_EQ(outputs[0], outputs[2]);
  }
}

TEST_F(CliTest, ScanFigureRegions) {
  const auto direct = invoke({"scan", "--tau", "0.9", "--at-eb", "--protocol", "direct", "--threads", "4"});
  ASSERT_EQ(direct.code, kOk) << direct.err;
  EXPECT_EQ(count_lines(direct.out), 201u * 201u + 1u);
  EXPECT_NE(direct.out.find(",Separable,Distillable,"), std::string::npos);

  const auto swap = invoke({"scan", "--tau", "0.3", "--at-eb", "--protocol", "swap", "--threads", "4"});
  ASSERT_EQ(swap.code, kOk) << swap.err;
  EXPECT_EQ(swap.out.find(",Separable,Entangling,"), std::string::npos);
  EXPECT_EQ(swap.out.find(",Separable,Distillable,"), std::string::npos);
}

TEST_F(CliTest, ScanContoursFile) {
  const auto contours = dir_ / "contours.csv";
  const auto r = invoke({"scan", "--tau", "0.75", "--at-eb", "--resolution", "51", "--contours",
                         contours.string(), "-o", (dir_ / "grid.csv").string()});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_GT(count_lines(slurp(contours)), 2u);
}

TEST_F(CliTest, OutputPathFromEnvironment) {
  const auto path = dir_ / "from_env.csv";
  ::setenv("ENTCORR_OUTPUT", path.c_str(), 1);
  const auto r = invoke({"scan", "--tau", "0.5", "--at-eb", "--resolution", "2"});
  ::unsetenv("ENTCORR_OUTPUT");
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(count_lines(slurp(path)), 5u);
}

TEST_F(CliTest, ConvergeDefaults) {
  const auto r = invoke({"converge"});
  ASSERT_EQ(r.code, kOk) << r.err;
  std::istringstream in(r.out);
  std::string line, last;
  std::getline(in, line);
  EXPECT_EQ(line, "mu,eps_finite,eps_asymptotic,rel_error");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    last = line;
    ++rows;
  }
  EXPECT_EQ(rows, 3u);
  EXPECT_LE(std::stod(last.substr(last.rfind(',') + 1)), 1e-3) << last;
}

TEST_F(CliTest, ConvergeSwapTable) {
  const auto r = invoke({"converge", "--protocol", "swap", "--mu", "100", "1e4"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(count_lines(r.out), 3u);
}

}  // namespace
}  // namespace entcorr::cli

// Copyright 2026 The flatlim Authors
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

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "flatlim/report.hpp"

#ifndef FLATLIM_CLI
#error "FLATLIM_CLI must name the command-line binary"
#endif
#ifndef FLATLIM_TEST_DATA
#error "FLATLIM_TEST_DATA must name the test data directory"
#endif

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string cmd = std::string(FLATLIM_CLI) + " " + args + " 2>/dev/null";
  CliResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(FLATLIM_TEST_DATA) + "/v1/" + name);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

TEST(Cli, ExitCodesFollowVerdicts) {
  EXPECT_EQ(run("certify --d 3 --points 0,1,3").code, 0);
  EXPECT_EQ(run("certify --d 4 --points 0,1,2,3").code, 2);
  EXPECT_EQ(run("certify --d 4 --points 0,1,2,3 --field p=3").code, 3);
  EXPECT_EQ(run("certify --d 3 --points 0,1,1").code, 3);
  EXPECT_EQ(run("certify --d 4 --points 0,1,2,3 --step-cap 1").code, 3);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run("").code, 64);
  EXPECT_EQ(run("certify --points 0,1,3").code, 64);
  EXPECT_EQ(run("certify --d 4 --points 0,1,3").code, 64);
  EXPECT_EQ(run("certify --d 3 --points 0,1,3 --random").code, 64);
  EXPECT_EQ(run("certify --d 3 --points 0,1,x").code, 64);
  EXPECT_EQ(run("certify --d 3 --points 0,1,3 --field p=4").code, 64);
  EXPECT_EQ(run("certify --d 3 --random --seed 1..x").code, 64);
  EXPECT_EQ(run("certify --d three --points 0,1,3").code, 64);
  EXPECT_EQ(run("frobnicate").code, 64);
  EXPECT_EQ(run("hilbert --ideal 'x+'").code, 64);
}

TEST(Cli, PaperExampleMatchesGoldenFiles) {
  CliResult text = run("example");
  EXPECT_EQ(text.code, 2);
  EXPECT_EQ(text.out, golden("example.txt"));
  CliResult json = run("example --json");
  EXPECT_EQ(json.code, 2);
  EXPECT_EQ(json.out, golden("example.json"));
  flatlim::CertificationReport r = flatlim::report_from_json(json.out);
  EXPECT_EQ(r.verdict, flatlim::Verdict::embedded(1));
}

TEST(Cli, BatchIsDeterministicAcrossJobCounts) {
  CliResult one = run("certify --d 4 --random --seed 1..6 --json --jobs 1");
  CliResult three = run("certify --d 4 --random --seed 1..6 --json --jobs 3");
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(one.out, three.out);
  EXPECT_EQ(one.out.front(), '[');
  EXPECT_NE(one.out.find("\"seed\": 6"), std::string::npos);
}

TEST(Cli, Utilities) {
  CliResult cat = run("catalan --max-d 7");
  EXPECT_EQ(cat.code, 0);
  EXPECT_EQ(cat.out, "c_2 = 1\nc_3 = 1\nc_4 = 2\nc_5 = 5\nc_6 = 14\nc_7 = 42\n");
  CliResult hp = run("hilbert --ideal 'x,y'");
  EXPECT_EQ(hp.code, 0);
  EXPECT_NE(hp.out.find("HP = n + 1"), std::string::npos);
  std::string file = ::testing::TempDir() + "flatlim_gb_input.txt";
  {
    std::ofstream f(file);
    f << "x^2, x*y\n";
  }
  CliResult gb = run("gb --order grevlex " + file);
  EXPECT_EQ(gb.code, 0);
  EXPECT_EQ(gb.out, "x*y\nx^2\n");
}

}  // namespace

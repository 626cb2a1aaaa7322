// Copyright 2026 The t-rot-opt Authors
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

#include "trot/cli.h"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "test_support.h"

using namespace trot;
using namespace trot::testing;
namespace fs = std::filesystem;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "t_rot_opt");
  std::vector<const char *> argv;
  for (const auto &a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("trot_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) {
    fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  fs::path dir_;
};

std::string mod5() { return data_path("mod5_4.qc").string(); }

}  // namespace

TEST_F(CliTest, optimize_mod5) {
  std::string out_path = (dir_ / "out.qc").string();
  CliResult r = invoke({"optimize", mod5(), "-o", out_path});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("t_before: 28"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("t_after: 8"), std::string::npos);
  EXPECT_NE(r.out.find("cnot_after: 28"), std::string::npos);
  EXPECT_NE(r.out.find("reduction_percent: 71.43"), std::string::npos);
  EXPECT_NE(r.out.find("verification: equivalent"), std::string::npos);
  EXPECT_EQ(counts(read_qc_file(out_path)).t_count, 8u);

  CliResult again = invoke({"verify", mod5(), out_path});
  EXPECT_EQ(again.code, cli::kExitOk);
  EXPECT_EQ(again.out, "equivalent\n");
}

TEST_F(CliTest, optimize_json) {
  CliResult r = invoke({"optimize", mod5(), "--json", "--mode", "resynth"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["t_after"], 8);
  EXPECT_EQ(j["verification"], "equivalent");
}

TEST_F(CliTest, unsupported_gate_is_input_error) {
  CliResult r = invoke({"optimize", write("bad.qc", ".v a\nBEGIN\nrz a\nEND\n")});
  EXPECT_EQ(r.code, cli::kExitInputError);
  EXPECT_NE(r.err.find("unsupported gate"), std::string::npos) << r.err;
}

TEST_F(CliTest, missing_file_and_bad_args) {
  EXPECT_EQ(invoke({"optimize", (dir_ / "nope.qc").string()}).code, cli::kExitInputError);
  EXPECT_EQ(invoke({}).code, cli::kExitInputError);
  EXPECT_EQ(invoke({"frobnicate"}).code, cli::kExitInputError);
  EXPECT_EQ(invoke({"optimize", mod5(), "--mode", "sideways"}).code, cli::kExitInputError);
  EXPECT_EQ(invoke({"--help"}).code, cli::kExitOk);
}

TEST_F(CliTest, verify_detects_difference) {
  std::string a = write("a.qc", ".v a\nBEGIN\nT a\nEND\n");
  std::string b = write("b.qc", ".v a\nBEGIN\nT* a\nEND\n");
  std::string c = write("c.qc", ".v a b\nBEGIN\ncnot a b\nT a\ncnot a b\nEND\n");
  CliResult r = invoke({"verify", a, b});
  EXPECT_EQ(r.code, cli::kExitVerificationFailed);
  EXPECT_EQ(r.out, "not equivalent\n");
  EXPECT_EQ(invoke({"verify", a, c}).code, cli::kExitOk);
  EXPECT_EQ(invoke({"verify", a, c, "--max-qubits", "1"}).code, cli::kExitInputError);
}

TEST_F(CliTest, stats) {
  CliResult r = invoke({"stats", mod5(), "--json"});
  ASSERT_EQ(r.code, cli::kExitOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["qubits"], 5);
  EXPECT_EQ(j["expanded_t_count"], 28);
  EXPECT_EQ(j["expanded_cnot_count"], 28);
  EXPECT_EQ(j["h_count"], 6);
}

TEST_F(CliTest, tdepth) {
  std::string chain = write("chain.qc", ".v a\nBEGIN\nT a\nH a\nT a\nH a\nT a\nEND\n");
  CliResult r = invoke({"tdepth", chain});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_NE(r.out.find("t_depth: 3"), std::string::npos) << r.out;

  std::string dot = (dir_ / "g.dot").string();
  CliResult m = invoke({"tdepth", mod5(), "--ancilla", "--dot", dot});
  ASSERT_EQ(m.code, cli::kExitOk) << m.err;
  EXPECT_NE(m.out.find("t_depth: 1"), std::string::npos) << m.out;
  EXPECT_NE(m.out.find("layered_t_depth: 1"), std::string::npos);
  EXPECT_TRUE(fs::exists(dot));
}

TEST_F(CliTest, bench_report) {
  fs::copy_file(mod5(), dir_ / "mod5_4.qc");
  write("broken.qc", ".v a\nBEGIN\nrz a\nEND\n");
  write("tt.qc", ".v a\nBEGIN\nT a\nT a\nEND\n");
  write("notes.txt", "ignored");
  CliResult r = invoke({"bench", dir_.string(), "--report", "csv", "--threads", "2"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::vector<std::string> rows;
  for (std::string line; std::getline(lines, line);) rows.push_back(line);
  ASSERT_EQ(rows.size(), 6u) << r.out;
  EXPECT_EQ(rows[0],
            "name,status,cnot_before,t_before,cnot_after,t_after,reduction_percent,wall_time_ms");
  EXPECT_EQ(rows[1].rfind("broken.qc,skipped: ", 0), 0u);
  EXPECT_EQ(rows[2].rfind("mod5_4.qc,ok,28,28,28,8,71.43,", 0), 0u) << rows[2];
  EXPECT_EQ(rows[3].rfind("tt.qc,ok,0,2,0,0,100.00,", 0), 0u) << rows[3];
  EXPECT_EQ(rows[4], "average,,,,,,85.71,");
  EXPECT_EQ(rows[5], "maximum,,,,,,100.00,");
  EXPECT_NE(r.err.find("skipped broken.qc"), std::string::npos);
}

TEST(cli, verify_cap_env) {
  ::unsetenv("T_ROT_OPT_VERIFY_CAP");
  EXPECT_EQ(cli::verify_cap_from_env(), 6u);
  ::setenv("T_ROT_OPT_VERIFY_CAP", "3", 1);
  EXPECT_EQ(cli::verify_cap_from_env(), 3u);
  ::setenv("T_ROT_OPT_VERIFY_CAP", "junk", 1);
  EXPECT_EQ(cli::verify_cap_from_env(9), 9u);
  ::unsetenv("T_ROT_OPT_VERIFY_CAP");
}

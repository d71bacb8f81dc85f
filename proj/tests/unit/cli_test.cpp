// Copyright 2026 The psdip Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace psdip::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "psdip");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(PSDIP_TEST_DATA_DIR) + "/" + name; }

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, CanonIso) {
  const auto r = invoke({"canon-iso", data("c4.g"), data("c4r.g")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0 2 1 3\n");
  EXPECT_EQ(invoke({"canon-iso", data("c4.g"), data("p4.g")}).out, "BOTTOM\n");
}

TEST(CliTest, Aut) {
  const auto r = invoke({"aut", data("c4.g")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("order 8\n", 0), 0u);
}

TEST(CliTest, ProveIsoIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"prove-iso", data("c4.g"), data("c4r.g"), "--seed", "5",
                                      "--transcript", "--m", "3"};
  const auto a = invoke(args);
  const auto b = invoke(args);
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("0 2 1 3\n{", 0), 0u);
}

TEST(CliTest, ProveIsoWritesTranscriptFile) {
  const auto path = std::filesystem::temp_directory_path() / "psdip_cli_test_transcript.json";
  std::filesystem::remove(path);
  const auto r = invoke({"prove-iso", data("c4.g"), data("p4.g"), "--protocol", "comb", "--strategy",
                         "lex_liar", "--out", path.string()});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "BOTTOM\n");
  EXPECT_TRUE(std::filesystem::exists(path));
  std::filesystem::remove(path);
}

TEST(CliTest, PsdTest) {
  const auto r = invoke({"psd-test", data("c4.g"), data("c4r.g"), "--trials", "200", "--strategies",
                         "honest,lex_liar", "--threads", "1"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("distinct outputs 1 [0 2 1 3]"), std::string::npos) << r.out;
}

TEST(CliTest, LexPath) {
  EXPECT_EQ(invoke({"lexpath", data("diamond.d")}).out, "0 1 3\n");
  EXPECT_EQ(invoke({"lexpath", data("diamond_rev.d")}).out, "0 2 3\n");
}

TEST(CliTest, ExtractBits) {
  const auto r = invoke({"extract-bits", data("c4.g"), data("c4r.g")});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "bits 00100111\nsolution 0 2 1 3\nqueries 8\n");
  EXPECT_EQ(invoke({"extract-bits", data("c4.g"), data("p4.g")}).out, "BOTTOM\nqueries 0\n");
}

TEST(CliTest, SelfCheckSmall) {
  const auto r = invoke({"selfcheck", "--max-n", "3", "--max-dag-n", "3"});
  EXPECT_EQ(r.code, kOk) << r.out;
}

TEST(CliTest, InputErrorsExitTwo) {
  const auto bad = write_temp("psdip_cli_test_bad.g", "3 1\n0 7\n");
  const auto r = invoke({"canon-iso", bad.string(), data("c4.g")});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("2:3:"), std::string::npos) << r.err;
  EXPECT_EQ(invoke({"canon-iso", "/nonexistent.g", data("c4.g")}).code, kInputError);
  EXPECT_EQ(invoke({"canon-iso", data("c4.g"), data("diamond.d")}).code, kInputError);
  EXPECT_EQ(invoke({"prove-iso", data("c4.g"), data("c4r.g"), "--protocol", "gni"}).code, kInputError);
  EXPECT_EQ(invoke({"prove-iso", data("c4.g"), data("c4r.g"), "--strategy", "oracle"}).code,
            kInputError);
  EXPECT_EQ(invoke({"psd-test", data("c4.g"), data("c4r.g"), "--trials", "0"}).code, kInputError);
  EXPECT_EQ(invoke({"bogus"}).code, kInputError);
  EXPECT_EQ(invoke({}).code, kInputError);
  std::filesystem::remove(bad);
}

TEST(CliTest, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, kOk); }

TEST(CliTest, OversizedBruteForceIsInputError) {
  std::ostringstream g;
  g << "11 0\n";
  const auto big = write_temp("psdip_cli_test_big.g", g.str());
  EXPECT_EQ(invoke({"canon-iso", big.string(), big.string()}).code, kInputError);
  std::filesystem::remove(big);
}

}  // namespace
}  // namespace psdip::cli

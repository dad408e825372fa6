// Copyright 2026 The outer1 Authors
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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace outer1::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Result call(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / ("outer1_cli_" + name);
  std::ofstream(path) << content;
  return path.string();
}

const char* kC6 = "n 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 1 6\n";

TEST(Cli, SharpPipelineGivesSix) {
  const Result gen = call({"generate", "sharp"});
  ASSERT_EQ(gen.code, kOk);
  const Result chi = call({"oracle", "chi", "--r", "3"}, gen.out);
  ASSERT_EQ(chi.code, kOk) << chi.err;
  EXPECT_EQ(chi.json()["chi"], 6);
}

TEST(Cli, CycleColoringVerifies) {
  const Result gen = call({"generate", "cycle", "5"});
  const Result col = call({"color", "--palette", "6"}, gen.out);
  ASSERT_EQ(col.code, kOk) << col.err;
  EXPECT_EQ(col.json()["valid"], true);
  EXPECT_EQ(col.json()["r"], 3);
  const std::string drawing = write_temp("c5.txt", gen.out);
  const std::string coloring = write_temp("c5.json", col.out);
  const Result ver = call({"verify", drawing, "--coloring", coloring, "--r", "3"});
  EXPECT_EQ(ver.code, kOk);
  EXPECT_EQ(ver.json()["valid"], true);
}

TEST(Cli, VerifyReportsViolations) {
  const std::string drawing = write_temp("c6.txt", kC6);
  const std::string coloring =
      write_temp("bad.json", R"({"colors": {"1":1,"2":2,"3":1,"4":2,"5":1,"6":2}})");
  const Result r = call({"verify", drawing, "--coloring", coloring, "--r", "3"});
  EXPECT_EQ(r.code, kVerdictFalse);
  const auto j = r.json();
  EXPECT_EQ(j["valid"], false);
  ASSERT_EQ(j["violations"].size(), 6u);
  EXPECT_EQ(j["violations"][0]["kind"], "too-few-colors");
}

TEST(Cli, ValidateVerdicts) {
  EXPECT_EQ(call({"validate"}, kC6).code, kOk);
  const Result bad = call({"validate"}, "n 5\ne 1 3\ne 1 4\ne 2 5\n");
  EXPECT_EQ(bad.code, kVerdictFalse);
  EXPECT_EQ(bad.json()["valid"], false);
  const Result syntax = call({"validate"}, "n 3\ne 1 2 3\n");
  EXPECT_EQ(syntax.json()["line"], 2);
  EXPECT_EQ(call({"validate", "/nonexistent/file"}).code, kInputError);
  const Result dot = call({"validate", "--emit", "dot"}, kC6);
  EXPECT_NE(dot.out.find("graph drawing"), std::string::npos);
}

TEST(Cli, StructureCommands) {
  const Result fc = call({"find-config"}, call({"generate", "cycle", "7"}).out);
  ASSERT_EQ(fc.code, kOk);
  EXPECT_EQ(fc.json()["config"], 1);
  EXPECT_EQ(call({"find-config"}, "n 3\ne 1 2\ne 2 3\n").code, kInputError);

  const Result le = call({"light-edge"}, kC6);
  EXPECT_EQ(le.json()["degree_sum"], 4);
  EXPECT_EQ(call({"light-edge", "--maximal"}, kC6).code, kInputError);

  const Result red = call({"reduce"}, "n 4\ne 1 2\ne 2 3\ne 3 4\ne 1 4\n");
  EXPECT_EQ(red.json()["kind"], "P2-adjacent-deg2");
  EXPECT_EQ(red.json()["deleted"], nlohmann::json::array({1, 2}));

  const Result d2 = call({"find-config", "--check-d2"}, call({"generate", "h9"}).out);
  EXPECT_EQ(d2.json()["config"], 9);
}

TEST(Cli, OracleVerdicts) {
  const std::string k5 =
      "n 5\ne 1 2\ne 1 3\ne 1 4\ne 1 5\ne 2 3\ne 2 4\ne 2 5\ne 3 4\ne 3 5\ne 4 5\n";
  EXPECT_EQ(call({"oracle", "recognize"}, k5).code, kVerdictFalse);
  EXPECT_EQ(call({"oracle", "recognize"}, kC6).code, kOk);
  EXPECT_EQ(call({"oracle", "maximal"}, kC6).code, kVerdictFalse);
  EXPECT_EQ(call({"oracle", "chi", "--r", "3", "--k-max", "4"}, call({"generate", "cycle", "5"}).out)
                .code,
            kVerdictFalse);
  EXPECT_EQ(call({"oracle", "chi"}, call({"generate", "cycle", "13"}).out).code, kInputError);
}

TEST(Cli, EnumerateWithChecks) {
  const Result r = call({"enumerate", "--n", "4", "--filter", "connected-min-deg-2"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(r.json()["count"], 10);
  for (const char* check : {"structure", "light", "reduce", "chi"}) {
    const Result c = call({"enumerate", "--n", "5", "--filter", "connected", "--check", check});
    ASSERT_EQ(c.code, kOk) << check;
    EXPECT_EQ(c.json()["failures"], 0);
  }
  EXPECT_EQ(call({"enumerate", "--n", "9"}).code, kInputError);
  EXPECT_EQ(call({"enumerate", "--n", "4", "--check", "nothing"}).code, kInputError);
}

TEST(Cli, WorkersDoNotChangeOutput) {
  const std::vector<std::string> args{"enumerate", "--n", "6", "--filter", "connected",
                                      "--check", "structure"};
  const Result one = call(args);
  ::setenv("OUTER1_WORKERS", "3", 1);
  const Result three = call(args);
  ::unsetenv("OUTER1_WORKERS");
  EXPECT_EQ(one.out, three.out);
}

TEST(Cli, OutputIsByteStable) {
  const std::string d = call({"generate", "random", "14", "--density", "0.7", "--seed", "3"}).out;
  EXPECT_EQ(call({"color"}, d).out, call({"color"}, d).out);
  EXPECT_EQ(call({"generate", "random", "14", "--density", "0.7", "--seed", "3"}).out, d);
}

TEST(Cli, ReportWrapsResult) {
  const Result r = call({"--report", "light-edge"}, kC6);
  ASSERT_EQ(r.code, kOk);
  const auto j = r.json();
  EXPECT_EQ(j["command"], "light-edge");
  EXPECT_EQ(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(j["result"]["degree_sum"], 4);
  EXPECT_TRUE(j.contains("elapsed_ms"));
}

TEST(Cli, ListsAndPaletteErrors) {
  EXPECT_EQ(call({"color", "--palette", "5"}, kC6).code, kInputError);
  std::string lists;
  for (int v = 1; v <= 6; ++v) lists += "l " + std::to_string(v) + " 3 5 7 9 11 13\n";
  const std::string path = write_temp("lists.txt", lists);
  const Result ok = call({"color", "--lists", path}, kC6);
  ASSERT_EQ(ok.code, kOk);
  for (const auto& [v, c] : ok.json()["colors"].items()) EXPECT_EQ(c.get<int>() % 2, 1);
  EXPECT_EQ(call({"color", "--lists", write_temp("short.txt", "l 1 1 2\n")}, kC6).code,
            kInputError);
}

TEST(Cli, BadArguments) {
  EXPECT_EQ(call({}).code, kInputError);
  EXPECT_EQ(call({"frobnicate"}).code, kInputError);
  EXPECT_EQ(call({"generate", "h99"}).code, kInputError);
  EXPECT_EQ(call({"generate", "cycle"}).code, kInputError);
  EXPECT_EQ(call({"--help"}).code, kOk);
}

TEST(Cli, GenerateEmitsDot) {
  const Result r = call({"generate", "h7", "--emit", "dot"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out.rfind("graph drawing", 0), 0u);
}

}  // namespace
}  // namespace outer1::cli

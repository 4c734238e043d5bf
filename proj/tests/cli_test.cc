// Copyright 2026 The rrfair Authors.
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


#include "rrfair/cli.h"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "rrfair/fixtures.h"
#include "rrfair/serialization.h"

namespace rrfair::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "rrfair");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
      Main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string TempPath(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("rrfair_cli_" + name))
      .string();
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = TempPath(name);
  std::ofstream(path) << text;
  return path;
}

bool Contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(CliRunTest, BluffTightness) {
  const Result r = Invoke({"run", "thm4", "--profile", "bluff"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "agent 1: {g1,g3,g5}"));
  EXPECT_TRUE(Contains(r.out, "agent 2: {g2,g4}"));
  EXPECT_TRUE(Contains(r.out, "pne_factor: 100/197 (0.507614)"));
}

TEST(CliRunTest, NoPneProfileFile) {
  const std::string path =
      WriteTemp("p3.json", "[[3, 2, 1, 0], [0, 1, 2, 3]]");
  const Result r = Invoke({"run", "prop3", "--profile", path, "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  const Rational alpha = RationalFromJson(j["equilibrium"]["pne_factor"]);
  EXPECT_LE(alpha, Rational(3, 4));
  // Verdict recomputable from the embedded rationals.
  const Rational bound = RationalFromJson(j["bound"]["value"]);
  EXPECT_EQ(bound, alpha / Rational(2));
  EXPECT_EQ(RationalFromJson(j["fairness"]["ef1_factor"]) >= bound,
            j["bound"]["holds"].get<bool>());
}

TEST(CliRunTest, SingleAgent) {
  const std::string path = WriteTemp(
      "one.json",
      R"({"n":1,"m":2,"agents":[{"class":"additive","weights":["1","2"]}]})");
  const Result r = Invoke({"run", path, "--profile", "truthful"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "pne_factor: 1 (1)"));
  EXPECT_TRUE(Contains(r.out, "ef1_factor: unbounded"));
}

TEST(CliRunTest, GuardSkipAndPolicy) {
  std::string weights;
  for (int g = 0; g < 16; ++g) weights += std::string(g ? "," : "") + "\"1\"";
  const std::string doc = R"({"n":2,"m":16,"agents":[)"
                          R"({"class":"additive","weights":[)" + weights +
                          R"(]},{"class":"additive","weights":[)" + weights +
                          "]}]}";
  const std::string path = WriteTemp("big.json", doc);
  const Result skipped = Invoke({"run", path});
  EXPECT_EQ(skipped.code, kExitOk);
  EXPECT_TRUE(Contains(skipped.out, "skipped: size guard"));
  EXPECT_EQ(Invoke({"run", path, "--require-equilibrium"}).code, kExitGuard);
  EXPECT_EQ(Invoke({"best-response", path, "--agent", "1"}).code, kExitGuard);
}

TEST(CliRunTest, InputErrors) {
  EXPECT_EQ(Invoke({"run", TempPath("missing.json")}).code, kExitInputError);
  const std::string bad = WriteTemp(
      "bad.json",
      R"({"n":1,"m":1,"agents":[{"class":"additive","weights":["1/0"]}]})");
  EXPECT_EQ(Invoke({"run", bad}).code, kExitInputError);
  EXPECT_EQ(Invoke({"run", "prop3", "--profile", bad}).code, kExitInputError);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(Invoke({}).code, kExitInputError);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliReproduceTest, AllFixturesPass) {
  for (const char* name : {"prop3", "thm4", "thm9", "prop10"}) {
    const Result r = Invoke({"reproduce", name});
    EXPECT_EQ(r.code, kExitOk) << name << "\n" << r.out;
    EXPECT_FALSE(Contains(r.out, "FAIL")) << name;
  }
  EXPECT_TRUE(Contains(Invoke({"reproduce", "prop3"}).out,
                       "max pne_factor over 576 profiles = 3/4: PASS"));
  const Result thm9 = Invoke({"reproduce", "thm9", "--json"});
  const nlohmann::json j = nlohmann::json::parse(thm9.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  bool saw_ratio = false;
  for (const auto& c : j["checks"]) {
    if (c["quantity"] == "agent 2 ef1 ratio towards agent 1") {
      EXPECT_EQ(c["actual"], "1001/3001");
      saw_ratio = true;
    }
  }
  EXPECT_TRUE(saw_ratio);
}

TEST(CliReproduceTest, OverridesAndConstraintErrors) {
  const Result r = Invoke({"reproduce", "thm4", "--eps1", "1/50", "--eps2",
                        "1/40", "--eps3", "1/30"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "200/391"));
  const Result bad = Invoke({"reproduce", "thm9", "--beta", "1/6"});
  EXPECT_EQ(bad.code, kExitInputError);
  EXPECT_TRUE(Contains(bad.err, "beta > 1/6 + delta"));
  EXPECT_EQ(Invoke({"reproduce", "thm5"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"reproduce", "prop10", "--eps", "1/10,1/20"}).code,
            kExitInputError);
}

TEST(CliScanTest, NoPneSummary) {
  const Result r = Invoke({"scan", "prop3", "--exhaustive", "--quiet"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(Contains(r.out, "576 profiles, max pne_factor 3/4"));
  EXPECT_TRUE(Contains(r.out, "violations 0"));
}

TEST(CliScanTest, SeededOutputIsIdentical) {
  const std::vector<std::string> args = {"scan",   "thm4",   "--samples",
                                         "50",     "--seed", "11",
                                         "--threads", "3"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  std::vector<std::string> single = args;
  single.back() = "1";
  EXPECT_EQ(Invoke(single).out, a.out);
  EXPECT_NE(Invoke({"scan", "thm4", "--samples", "50", "--seed", "12"}).out,
            a.out);
}

TEST(CliScanTest, AdditivePairHasNoViolations) {
  const std::string path = TempPath("gen_add.json");
  ASSERT_EQ(Invoke({"generate", "--class", "additive", "-n", "2", "-m", "4",
                 "--seed", "5", "-o", path})
                .code,
            kExitOk);
  const Result r = Invoke({"scan", path, "--json"});
  EXPECT_EQ(r.code, kExitOk);
  std::istringstream lines(r.out);
  std::string line, last;
  int count = 0;
  while (std::getline(lines, line)) {
    last = line;
    ++count;
  }
  EXPECT_EQ(count, 577);
  const nlohmann::json summary = nlohmann::json::parse(last)["summary"];
  EXPECT_EQ(summary["profiles"], 576);
  EXPECT_EQ(summary["violations"], 0);
}

TEST(CliScanTest, ExhaustiveGuard) {
  EXPECT_EQ(Invoke({"scan", "prop10"}).code, kExitGuard);
}

TEST(CliCertifyTest, Classes) {
  const Result p3 = Invoke({"certify", "prop3"});
  EXPECT_EQ(p3.code, kExitOk);
  EXPECT_TRUE(Contains(p3.out, "cancelable   no  witness S={g1} T={g2} g=g4"));
  const Result thm9 = Invoke({"certify", "thm9"});
  EXPECT_FALSE(Contains(thm9.out, " no"));
  const std::string path = WriteTemp(
      "super.json",
      R"({"n":1,"m":2,"agents":[{"class":"table","table":["0","1","1","3"]}]})");
  const Result sup = Invoke({"certify", path, "--json"});
  const nlohmann::json j = nlohmann::json::parse(sup.out);
  const auto& sub = j["agents"][0]["checks"]["submodular"];
  EXPECT_FALSE(sub["holds"].get<bool>());
  EXPECT_EQ(sub["witness"]["g"], "g2");
}

TEST(CliGenerateTest, DeterministicDocuments) {
  const Result a =
      Invoke({"generate", "--class", "oxs", "-n", "3", "-m", "6", "--seed", "9"});
  const Result b =
      Invoke({"generate", "--class", "oxs", "-n", "3", "-m", "6", "--seed", "9"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(LoadInstance(a.out).num_goods(), 6);
  EXPECT_EQ(Invoke({"generate", "--class", "xos"}).code, kExitInputError);
  EXPECT_EQ(Invoke({"generate", "--class", "submodular_table", "-m", "30"}).code,
            kExitGuard);
}

TEST(CliBestResponseTest, BluffTightnessAgentTwo) {
  const Result r = Invoke({"best-response", "thm4", "--agent", "2", "--json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["best_response_value"], "197/100");
  EXPECT_EQ(j["ratio"], "100/197");
  EXPECT_EQ(j["best_response_bundle"], nlohmann::json({"g3", "g4"}));
  EXPECT_EQ(Invoke({"best-response", "thm4", "--agent", "3"}).code,
            kExitInputError);
}

}  // namespace
}  // namespace rrfair::cli

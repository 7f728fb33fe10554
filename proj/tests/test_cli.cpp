// Copyright 2026 The rsgraph Authors.
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "rsgraph/constructions.hpp"
#include "rsgraph/rsg_format.hpp"

namespace rsgraph::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rsg_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, BoundPrintsMaxR) {
  Result r = invoke({"bound", "--n", "10", "--t", "5"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, "max r = 3\n");
  EXPECT_EQ(invoke({"bound", "--n", "6", "--t", "4"}).out, "max r = 9/5\n");
}

TEST_F(CliTest, BoundVerdictExitCodes) {
  EXPECT_EQ(invoke({"bound", "--n", "10", "--r", "3", "--t", "5"}).code, kExitOk);
  EXPECT_EQ(invoke({"bound", "--n", "10", "--r", "3", "--t", "6"}).code, kExitNegative);
  Result j = invoke({"bound", "--n", "16", "--r", "4", "--t", "10", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["kind"], "bound-verdict");
  EXPECT_EQ(doc["regime"], "exactly-quarter");
  EXPECT_EQ(doc["max_t_quarter"], 40);
  EXPECT_EQ(invoke({"bound", "--n", "4", "--r", "3", "--t", "1"}).code, kExitUsage);
}

TEST_F(CliTest, ConstructThenVerify) {
  std::string file = path("k2.rsg");
  Result c = invoke({"construct", "kneser", "--k", "2", "-o", file});
  ASSERT_EQ(c.code, kExitOk) << c.err;
  Result v = invoke({"verify", file});
  EXPECT_EQ(v.code, kExitOk);
  EXPECT_NE(v.out.find("verdict: pass"), std::string::npos);
  Result j = invoke({"verify", file, "--json"});
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["verdict"], "pass");
  EXPECT_EQ(doc["stats"]["c"], "3/10");
  EXPECT_EQ(doc["schema_version"], 1);
}

TEST_F(CliTest, ConstructToStdoutIsCanonical) {
  Result c = invoke({"construct", "hypercube-augmented", "--k", "4"});
  EXPECT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out, emit_rsg(hypercube_rs(4, true)));
  Result cay = invoke({"construct", "cayley-ap", "--modulus", "41", "--limit", "13"});
  EXPECT_EQ(cay.out.substr(0, cay.out.find('\n')), "rsg 82 41 7");
  Result dc = invoke({"construct", "double-cover", "--base", "kneser", "--k", "1"});
  EXPECT_EQ(dc.out.substr(0, dc.out.find('\n')), "rsg 6 3 2");
}

TEST_F(CliTest, ConstructWrapsInputFile) {
  std::string base = write("base.rsg", emit_rsg(kneser_rs(2)));
  Result u = invoke({"construct", "disjoint-union", "--copies", "2", "--input", base});
  EXPECT_EQ(u.out.substr(0, u.out.find('\n')), "rsg 20 5 6");
}

TEST_F(CliTest, ConstructErrors) {
  EXPECT_EQ(invoke({"construct", "petersen"}).code, kExitUsage);
  EXPECT_EQ(invoke({"construct", "hypercube-augmented", "--k", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"construct", "cayley-ap", "--modulus", "40"}).code, kExitUsage);
  EXPECT_EQ(invoke({"construct", "cayley-ap", "--modulus", "41", "--set", "1,x"}).code,
            kExitUsage);
}

TEST_F(CliTest, VerifyFailureAndParseErrors) {
  std::string bad = write("bad.rsg", "rsg 3 1 2\n0 1 0\n1 2 0\n");
  Result v = invoke({"verify", bad});
  EXPECT_EQ(v.code, kExitNegative);
  EXPECT_NE(v.out.find("not-a-matching"), std::string::npos);

  std::string broken = write("broken.rsg", "rsg 3 1 2\n0 1 0\n1 x 0\n");
  Result p = invoke({"verify", broken});
  EXPECT_EQ(p.code, kExitParse);
  EXPECT_NE(p.err.find("line 3"), std::string::npos);

  EXPECT_EQ(invoke({"verify", path("missing.rsg")}).code, kExitNoInput);
}

TEST_F(CliTest, SearchVerdicts) {
  Result sat = invoke({"search", "--n", "6", "--r", "2", "--t", "3"});
  EXPECT_EQ(sat.code, kExitOk);
  EXPECT_NE(sat.out.find("verdict: SAT"), std::string::npos);
  EXPECT_NE(sat.out.find("rsg 6 3 2"), std::string::npos);

  Result unsat = invoke({"search", "--n", "10", "--r", "3", "--t", "6"});
  EXPECT_EQ(unsat.code, kExitNegative);
  Result full =
      invoke({"search", "--n", "10", "--r", "3", "--t", "6", "--no-eq1-shortcut"});
  EXPECT_EQ(full.code, kExitNegative);

  Result j = invoke({"search", "--n", "12", "--r", "3", "--t", "8", "--nodes", "5",
                     "--no-eq1-shortcut", "--json"});
  EXPECT_EQ(j.code, kExitIndeterminate);
  EXPECT_EQ(nlohmann::json::parse(j.out)["verdict"], "INDETERMINATE");
}

TEST_F(CliTest, SearchHonorsEnvironmentBudget) {
  ::setenv("RSG_DEFAULT_BUDGET", "5", 1);
  Result r = invoke({"search", "--n", "12", "--r", "3", "--t", "8", "--no-eq1-shortcut"});
  ::unsetenv("RSG_DEFAULT_BUDGET");
  EXPECT_EQ(r.code, kExitIndeterminate);
}

TEST_F(CliTest, SearchWritesCertificate) {
  std::string file = path("cert.rsg");
  Result r = invoke({"search", "--n", "10", "--r", "3", "--t", "5", "-o", file});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(invoke({"verify", file}).code, kExitOk);
}

TEST_F(CliTest, AuditAndDistance) {
  std::string q = write("q.rsg", emit_rsg(hypercube_rs(4, true)));
  Result a = invoke({"audit", q, "--json"});
  EXPECT_EQ(a.code, kExitOk);
  auto doc = nlohmann::json::parse(a.out);
  EXPECT_EQ(doc["kind"], "expansion-audit");
  EXPECT_TRUE(doc["double_covered"].get<bool>());
  EXPECT_EQ(4 * (2 * doc["E1"].get<int>() + doc["E0"].get<int>()),
            doc["n"].get<int>() * doc["t"].get<int>());

  std::string k = write("k.rsg", emit_rsg(kneser_rs(2)));
  Result d = invoke({"distance", k, "--json"});
  EXPECT_EQ(d.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(d.out)["min_distance"], 6);

  std::string bad = write("bad.rsg", "rsg 3 1 2\n0 1 0\n1 2 0\n");
  EXPECT_EQ(invoke({"audit", bad}).code, kExitNegative);
}

TEST_F(CliTest, MaxT) {
  std::string k = write("k.rsg", emit_rsg(kneser_rs(2)));
  Result r = invoke({"max-t", k, "--r", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("t = 5"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "10"}).code, kExitUsage);
  EXPECT_EQ(invoke({"bound", "--n", "ten", "--t", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

}  // namespace
}  // namespace rsgraph::cli

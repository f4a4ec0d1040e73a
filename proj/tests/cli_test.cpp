// Copyright 2026 The invsp Authors
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

#include "invsp/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "invsp/construct.hpp"
#include "invsp/json_io.hpp"

namespace invsp {
namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult RunCli(const std::vector<std::string>& args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(args, in, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

 private:
  const char* name_;
};

TEST(CliTest, BasicPolyBothMethodsAgree) {
  const RunResult a = RunCli({"basic-poly", "--group", "gamma7"});
  const RunResult b = RunCli({"basic-poly", "--group", "gamma7", "--method", "product"});
  ASSERT_EQ(a.code, cli::kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(PolynomialFromJson(ParseJson(a.out)), BasicPolynomial(GroupSpec::Gamma7()));
}

TEST(CliTest, TensorAndValidate) {
  const RunResult t = RunCli({"tensor", "--group", "gamma7", "--h", R"({"nvars":3,"terms":[{"e":[1,1,1],"c":"14"}]})"});
  ASSERT_EQ(t.code, cli::kOk) << t.err;
  const Json tj = ParseJson(t.out);
  EXPECT_EQ(PolynomialFromJson(tj["g"]).term_count(), 29u);
  EXPECT_TRUE(tj["report"]["special"].get<bool>());
  EXPECT_EQ(RunCli({"validate", "--group", "gamma7", "-"}, tj["g"].dump()).code, cli::kOk);
  const RunResult bad = RunCli({"validate", "--group", "gamma7", R"({"nvars":3,"terms":[{"e":[1,0,0],"c":"1"}]})"});
  EXPECT_EQ(bad.code, cli::kMismatch);
  EXPECT_FALSE(ParseJson(bad.out)["special"].get<bool>());
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(RunCli({}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"basic-poly", "--group", "scalar:1:2"}).code, cli::kUsage);
  EXPECT_EQ(RunCli({"basic-poly", "--group", "gamma7", "--method", "other"}).code, cli::kUsage);
  const RunResult parse = RunCli({"validate", "--group", "gamma7", "{\"nvars\": 3,\n \"terms\": [}"});
  EXPECT_EQ(parse.code, cli::kUsage);
  EXPECT_NE(parse.err.find("line 2"), std::string::npos) << parse.err;
  EXPECT_EQ(RunCli({"gaps", "--group", "gamma7", "--max-degree", "10", "--targets", "29", "--cap", "30"}).code,
            cli::kUsage);
  EXPECT_EQ(RunCli({"--help"}).code, cli::kOk);
}

TEST(CliTest, GapsJsonAndText) {
  const RunResult j = RunCli({"gaps", "--group", "gamma7", "--max-degree", "10"});
  ASSERT_EQ(j.code, cli::kOk) << j.err;
  EXPECT_EQ(ParseJson(j.out)["values"], Json::array({17, 29, 30}));
  const RunResult t = RunCli({"gaps", "--group", "gamma7", "--max-degree", "10", "--format", "text"});
  EXPECT_NE(t.out.find("achievable: 17, 29, 30"), std::string::npos) << t.out;
  const RunResult tg = RunCli({"gaps", "--group", "gamma7", "--max-degree", "10", "--targets", "29,31"});
  ASSERT_EQ(tg.code, cli::kOk) << tg.err;
  EXPECT_NE(tg.out.find("\"witness\""), std::string::npos);
}

TEST(CliTest, SignedSearch) {
  const RunResult r = RunCli({"gaps", "--group", "scalar:4:2", "--max-degree", "8", "--signed", "--targets", "8"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const Json j = ParseJson(r.out);
  EXPECT_EQ(j["sign_mode"], "signed_H");
  EXPECT_EQ(j["targets"][0]["status"], "witness");
}

TEST(CliTest, BudgetFromEnvironmentAndFlag) {
  {
    ScopedEnv env("INVSP_BUDGET", "5");
    EXPECT_EQ(RunCli({"gaps", "--group", "gamma7", "--max-degree", "12"}).code, cli::kBudgetExhausted);
    // The flag wins over the environment.
    EXPECT_EQ(RunCli({"gaps", "--group", "gamma7", "--max-degree", "10", "--budget", "0"}).code, cli::kOk);
  }
  EXPECT_EQ(RunCli({"gaps", "--group", "gamma7", "--max-degree", "12", "--budget", "5"}).code,
            cli::kBudgetExhausted);
  {
    ScopedEnv env("INVSP_BUDGET", "lots");
    EXPECT_EQ(RunCli({"gaps", "--group", "gamma7", "--max-degree", "10"}).code, cli::kUsage);
  }
}

TEST(CliTest, FamilyCommands) {
  const RunResult b = RunCli({"family", "build", "--group", "gamma7", "--h-degree", "4"});
  ASSERT_EQ(b.code, cli::kOk) << b.err;
  EXPECT_EQ(ParseJson(b.out)["slots"].size(), 51u);
  const RunResult inst =
      RunCli({"family", "instantiate", "--family", "-", "--point", R"({"U":"14","B":"0","C":"0","D":"0"})"}, b.out);
  ASSERT_EQ(inst.code, cli::kOk) << inst.err;
  const Json ij = ParseJson(inst.out);
  EXPECT_EQ(ij["l0"], 29);
  EXPECT_TRUE(ij["admissible"].get<bool>());
  EXPECT_EQ(PolynomialFromJson(ij["g"]).term_count(), 29u);
  const RunResult l0 = RunCli({"l0range", "--group", "gamma7", "--h-degree", "3", "--format", "text"});
  ASSERT_EQ(l0.code, cli::kOk) << l0.err;
  EXPECT_NE(l0.out.find("17"), std::string::npos);
  EXPECT_NE(l0.out.find("29"), std::string::npos);
}

TEST(CliTest, Closure) {
  const RunResult r = RunCli({"closure", "--base", "[17]", "--bound", "60", "--format", "text"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("17, 33, 34, 49..51"), std::string::npos) << r.out;
  EXPECT_EQ(RunCli({"closure", "--base", "[0]"}).code, cli::kUsage);
}

TEST(CliTest, VerifyPaperAllPass) {
  const RunResult r = RunCli({"verify-paper"});
  ASSERT_EQ(r.code, cli::kOk) << r.out;
  const Json j = ParseJson(r.out);
  EXPECT_EQ(j["outcome"], "verified");
  EXPECT_GE(j["checks"].size(), 40u);
  EXPECT_EQ(j["failed"], 0);
  for (const Json& c : j["checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["key"];
}

}  // namespace
}  // namespace invsp

// Copyright 2026 The ecq Authors
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

#include <sstream>

#include "ecq/cli.hpp"
#include "json.hpp"

namespace ecq {
namespace {

struct Invocation {
  int code;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args) {
  args.insert(args.begin(), "ecq");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

const std::string kFixtures = ECQ_DATA_DIR "/fixtures.jsonl";

TEST(Cli, Describe) {
  const Invocation r = run({"describe", "-a", "0", "0", "1", "0", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("discriminant: -27\n"), std::string::npos);
  EXPECT_NE(r.out.find("conductor: 27\n"), std::string::npos);
  EXPECT_NE(r.out.find("kodaira: II"), std::string::npos);
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, Classify) {
  const Invocation r = run({"classify", "--family", "6", "1", "-p", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("candidates: II, III\n"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  const Invocation r = run({"torsion", "--records", kFixtures, "--label", "54b3", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["structure"], "Z/9");
  EXPECT_EQ(j["order"], 9);
}

TEST(Cli, Analytic) {
  const Invocation r = run({"analytic", "-a", "0", "-1", "1", "-10", "-20", "--json"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["L_over_omega"].get<double>(), 0.2, 1e-9);
  EXPECT_EQ(j["sha"], 1);
  const Invocation rank1 = run({"analytic", "--records", kFixtures, "--label", "171.b2", "--json"});
  EXPECT_EQ(nlohmann::json::parse(rank1.out)["sha"], "rank_positive_suspected");
}

TEST(Cli, TwistDualRootnum) {
  const Invocation t = run({"twist", "-a", "0", "-1", "0", "3", "1", "--d", "-1", "--json"});
  EXPECT_EQ(t.code, 0);
  EXPECT_EQ(nlohmann::json::parse(t.out)["conductor"], 44);
  const Invocation d = run({"dual", "--family", "6", "1", "--json"});
  EXPECT_EQ(nlohmann::json::parse(d.out)["dual_conductor"], 189);
  const Invocation w = run({"rootnum", "-a", "0", "0", "1", "-1", "0", "--json"});
  EXPECT_EQ(nlohmann::json::parse(w.out)["global"], "-1");
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"describe"}).code, 2);
  EXPECT_EQ(run({"describe", "-a", "1", "2"}).code, 2);
  EXPECT_EQ(run({"describe", "-a", "0", "0", "0", "0", "0"}).code, 2);  // singular
  EXPECT_EQ(run({"describe", "-a", "0", "0", "1", "0", "0", "--family", "1", "1"}).code, 2);
  EXPECT_EQ(run({"torsion", "--records", kFixtures, "--label", "nope"}).code, 2);
  const Invocation r = run({"bogus"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, VerifyFixtures) {
  const Invocation ok = run({"verify", "--records", kFixtures, "--d", "-1", "--d", "5"});
  EXPECT_EQ(ok.code, 0) << ok.out;
  // Forcing the d = -1 twist of 176.a2 reproduces the known counterexample.
  const Invocation forced =
      run({"verify", "--records", kFixtures, "--label", "176.a2", "--d", "-1", "--twist-sha", "--force"});
  EXPECT_EQ(forced.code, 1);
  EXPECT_NE(forced.out.find("twist_sha_divisibility 176.a2: fail"), std::string::npos) << forced.out;
}

TEST(Cli, ScanIsReproducible) {
  const std::vector<std::string> args{"scan", "--amax", "5", "--bmax", "5", "--json", "--d", "5"};
  const Invocation a = run(args);
  std::vector<std::string> threaded = args;
  threaded.insert(threaded.end(), {"--threads", "3"});
  const Invocation b = run(threaded);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run(args).out, a.out);
}

}  // namespace
}  // namespace ecq

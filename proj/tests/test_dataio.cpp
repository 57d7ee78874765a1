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

#include <fstream>
#include <sstream>

#include "ecq/dataio.hpp"
#include "ecq/error.hpp"

namespace ecq {
namespace {

TEST(DataIo, ParsesRecord) {
  const CurveRecord r = parse_record(
      R"({"label":"11a1","a":[0,-1,1,-10,-20],"rank":0,"torsion":5,"sha":1,"tamagawa":{"11":5},"extra":true})");
  EXPECT_EQ(r.label, "11a1");
  EXPECT_EQ(r.a[3], -10);
  EXPECT_EQ(r.rank, 0);
  EXPECT_EQ(r.torsion, 5);
  EXPECT_EQ(r.sha, 1);
  ASSERT_TRUE(r.tamagawa.has_value());
  EXPECT_EQ(r.tamagawa->at(11), 5);
  EXPECT_EQ(r.name(), "11a1");
  EXPECT_EQ(r.curve(), WeierstrassCurve::from_integers(0, -1, 1, -10, -20));
}

TEST(DataIo, BigCoefficientsAsStrings) {
  const CurveRecord r = parse_record(R"({"a":[0,0,0,"-123456789012345678901234567890",1]})");
  EXPECT_EQ(r.a[3], Integer("-123456789012345678901234567890"));
  EXPECT_FALSE(r.label.has_value());
  EXPECT_EQ(r.name(), "[0,0,0,-123456789012345678901234567890,1]");
}

TEST(DataIo, RejectsMalformed) {
  for (const char* bad : {
           R"({"a":[0,0,0,0]})",                       // four coefficients
           R"({"label":"x"})",                        // no coefficients
           R"({"a":[0,0,0,0,0]})",                    // singular
           R"({"a":[0,0,1,0,0],"rank":-1})",          // negative rank
           R"({"a":[0,0,1,0,0],"torsion":0})",        // torsion must be positive
           R"({"a":[0,0,1,0,0],"tamagawa":{"4":1}})",  // non-prime key
           R"({"a":[0,0,1,0.5,0]})",                  // non-integer
           R"({"a":[0,0,1,0,0)",                      // truncated
       }) {
    EXPECT_THROW(parse_record(bad), Error) << bad;
  }
}

TEST(DataIo, StreamDiagnosticsCarryLineNumbers) {
  std::istringstream in(
      "{\"label\":\"a\",\"a\":[0,0,1,0,0]}\n"
      "\n"
      "not json\n"
      "{\"label\":\"b\",\"a\":[0,0,1,-1,0]}\n");
  const ParseResult r = parse_records(in);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[1].label, "b");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].line, 3);
  EXPECT_FALSE(find_label(r.records, "c"));
  EXPECT_EQ(find_label(r.records, "b")->a[3], -1);
}

TEST(DataIo, RoundTrip) {
  CurveRecord r;
  r.label = "54b3";
  r.a = {1, -1, 1, -14, 29};
  r.torsion = 9;
  r.sha = 1;
  r.tamagawa = std::map<long, long>{{2, 9}, {3, 3}};
  const std::string line = serialize_record(r);
  EXPECT_EQ(line, R"({"label":"54b3","a":[1,-1,1,-14,29],"torsion":9,"sha":1,"tamagawa":{"2":9,"3":3}})");
  EXPECT_EQ(parse_record(line), r);
}

TEST(DataIo, FixturesFile) {
  std::ifstream in(ECQ_DATA_DIR "/fixtures.jsonl");
  ASSERT_TRUE(in);
  const ParseResult r = parse_records(in);
  EXPECT_TRUE(r.diagnostics.empty());
  EXPECT_EQ(r.records.size(), 7u);
  for (const char* label : {"11a1", "44.a2", "176.a2", "324.b1", "171.b2", "54b3", "14a4"}) {
    EXPECT_TRUE(find_label(r.records, label)) << label;
  }
}

TEST(DataIo, VerdictSchema) {
  Verdict v;
  v.theorem = "twist_torsion";
  v.curve = "11a1";
  v.status = Status::not_applicable;
  v.witness["d"] = -1;
  v.witness["reason"] = "d = -1 excluded";
  EXPECT_EQ(to_json_line(v),
            R"({"theorem":"twist_torsion","curve":"11a1","status":"not_applicable","witness":{"d":-1,"reason":"d = -1 excluded"}})");
  std::ostringstream out;
  write_report({v, v}, out);
  EXPECT_EQ(out.str(), to_json_line(v) + "\n" + to_json_line(v) + "\n");
  EXPECT_EQ(to_string(Status::skipped), "skipped");
}

}  // namespace
}  // namespace ecq

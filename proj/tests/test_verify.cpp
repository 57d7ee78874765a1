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

#include "ecq/dataio.hpp"
#include "ecq/verify.hpp"

namespace ecq {
namespace {

const WeierstrassCurve k11a1 = WeierstrassCurve::from_integers(0, -1, 1, -10, -20);
const WeierstrassCurve k44a2 = WeierstrassCurve::from_integers(0, 1, 0, 3, -1);
const WeierstrassCurve k176a2 = WeierstrassCurve::from_integers(0, -1, 0, 3, 1);
const WeierstrassCurve k324b1 = WeierstrassCurve::from_integers(0, 0, 0, -39, 94);
const WeierstrassCurve k171b2 = WeierstrassCurve::from_integers(0, 0, 1, -84, 315);

std::string reason(const Verdict& v) { return v.witness.value("reason", ""); }

TEST(Verify, TwistTorsion) {
  const Verdict v = check_twist_torsion(k11a1, 5);
  EXPECT_EQ(v.status, Status::pass);
  EXPECT_EQ(v.witness["torsion_order"].get<int>() % 5, 1);
  const Verdict minus_one = check_twist_torsion(k176a2, -1);
  EXPECT_EQ(minus_one.status, Status::not_applicable);
  EXPECT_EQ(reason(minus_one), "d = -1 excluded");
  EXPECT_EQ(check_twist_torsion(k11a1, 11).status, Status::not_applicable);  // gcd(d, N) > 1
  EXPECT_EQ(check_twist_torsion(k11a1, 3).status, Status::pass);
  EXPECT_EQ(check_twist_torsion(k11a1, 4).status, Status::not_applicable);
}

TEST(Verify, TwistReduction) {
  const Verdict v = check_twist_reduction(k11a1, 7);
  EXPECT_EQ(v.status, Status::pass);
  EXPECT_EQ(v.witness["primes"][0]["kodaira"], "I0*");
  const Verdict two = check_twist_reduction(k11a1, -2);
  EXPECT_EQ(two.status, Status::pass);
  const std::string k = two.witness["primes"][0]["kodaira"];
  EXPECT_TRUE(k == "I8*" || k == "II") << k;
  EXPECT_EQ(check_twist_reduction(k11a1, 1).status, Status::not_applicable);
  EXPECT_EQ(check_twist_reduction(k11a1, -1).status, Status::not_applicable);
}

TEST(Verify, ThreeTorsionShaHypotheses) {
  const Verdict v324 = check_three_torsion_sha(k324b1);
  EXPECT_EQ(v324.status, Status::not_applicable);
  EXPECT_EQ(reason(v324), "reduction II modulo 3");
  ShaSource rank_one;
  rank_one.rank = 1;
  rank_one.sha = 1;
  const Verdict v171 = check_three_torsion_sha(k171b2, rank_one);
  EXPECT_EQ(v171.status, Status::not_applicable);
  EXPECT_NE(reason(v171).find("rank 1"), std::string::npos);
  // Analytically: the root number is -1.
  EXPECT_EQ(check_three_torsion_sha(k171b2).status, Status::not_applicable);
  EXPECT_EQ(check_three_torsion_sha(k11a1).status, Status::not_applicable);
}

TEST(Verify, ThreeTorsionShaBranches) {
  // Family curves with I_n* at 3 and analytic rank 0 from the scan box,
  // one for each count of additive places.
  int seen_b = 0, seen_ac = 0;
  for (long a = -30; a <= 30 && (seen_b == 0 || seen_ac == 0); a += 3) {
    for (long b = 1; b <= 40; ++b) {
      if (!is_normalized(a, b)) continue;
      const Verdict v = check_three_torsion_sha(FamilyCurve(a, b).curve());
      if (v.status != Status::pass && v.status != Status::fail) continue;
      EXPECT_EQ(v.status, Status::pass) << to_json_line(v);
      if (v.witness["branch"] == "b") {
        ++seen_b;
        EXPECT_EQ(v.witness["tamagawa_product"].get<long>() % 9, 0);
      } else {
        ++seen_ac;
        EXPECT_TRUE(v.witness["conditional_on_bsd"].get<bool>());
        EXPECT_LT(v.witness["sha_residual"].get<double>(), kShaResidualLimit);
      }
    }
  }
  EXPECT_GT(seen_b + seen_ac, 0);
}

TEST(Verify, TwistDivisibilityCounterexample) {
  // 176.a2 twisted by -1 is 44.a2: |T|^2 = 9 while Sha * prod c_p = 3.
  const Verdict na = check_twist_divisibility(k176a2, -1);
  EXPECT_EQ(na.status, Status::not_applicable);
  const Verdict forced = check_twist_divisibility(k176a2, -1, {}, TwistMode::squarefree, true);
  EXPECT_EQ(forced.status, Status::fail);
  EXPECT_EQ(forced.witness["odd_torsion_squared"], 9);
  EXPECT_EQ(forced.witness["odd_sha_times_tamagawa"], 3);
  // As a fundamental discriminant -4 (d = -1) the hypotheses hold when 2 !| N,
  // which is not the case for N = 176.
  EXPECT_EQ(check_twist_divisibility(k176a2, -4, {}, TwistMode::fundamental_discriminant).status,
            Status::not_applicable);
}

TEST(Verify, TwistDivisibility) {
  // d outside {+-1, +-3}: torsion of the twist is 2-primary, so this passes.
  const Verdict v = check_twist_divisibility(k11a1, 5);
  EXPECT_EQ(v.status, Status::pass) << to_json_line(v);
  EXPECT_EQ(v.witness["odd_torsion_squared"], 1);
  const Verdict three = check_twist_divisibility(k11a1, 3);
  EXPECT_EQ(three.witness["primes"], "p | 2N");
}

TEST(Verify, FundamentalDiscriminants) {
  for (long d : {-3L, -4L, 5L, -7L, 8L, -8L, 12L, 13L, -20L, 24L}) EXPECT_TRUE(is_fundamental_discriminant(d)) << d;
  for (long d : {0L, 1L, -1L, 2L, 3L, 9L, 16L, -12L, 20L}) EXPECT_FALSE(is_fundamental_discriminant(d)) << d;
}

TEST(Verify, FamilyChecks) {
  const FamilyCurve f(6, 1);
  EXPECT_EQ(check_family_classifier(f).status, Status::pass);
  EXPECT_EQ(check_isogeny_witness(f).status, Status::pass);
  const Verdict ratio = check_period_ratio(f);
  EXPECT_EQ(ratio.status, Status::pass);
  const double r = ratio.witness["ratio"];
  EXPECT_TRUE(std::abs(r - 1) < 1e-9 || std::abs(r - 3) < 1e-9) << r;
  const Verdict split = check_split_tamagawa_ratio(FamilyCurve(1, 4));
  EXPECT_EQ(split.status, Status::pass) << to_json_line(split);
}

TEST(Verify, AdditiveTorsionTypes) {
  for (long t = -6; t <= 6; ++t) {
    for (int l : {5, 7}) {
      if (t == 0) continue;
      WeierstrassCurve e = WeierstrassCurve::from_integers(0, 0, 1, 0, 0);
      try {
        e = tate_normal_form(l, t);
      } catch (const std::exception&) {
        continue;
      }
      EXPECT_NE(check_additive_torsion_types(e).status, Status::fail) << e.to_string();
    }
  }
}

TEST(Verify, VerifyCurveUsesRecordSha) {
  ShaSource s;
  s.rank = 0;
  s.sha = 1;
  const std::vector<Verdict> vs = verify_curve(k44a2, s, {}, "44.a2");
  ASSERT_FALSE(vs.empty());
  for (const Verdict& v : vs) {
    EXPECT_EQ(v.curve, "44.a2");
    EXPECT_NE(v.status, Status::fail) << to_json_line(v);
  }
}

TEST(Verify, ScanIsDeterministic) {
  ScanBox box{-6, 6, 1, 6};
  ScanOptions one;
  one.verify.twists = {-2, 5};
  one.torsion_family_height = 2;
  ScanOptions many = one;
  many.threads = 4;
  std::ostringstream a, b;
  write_report(scan(box, one), a);
  write_report(scan(box, many), b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_FALSE(a.str().empty());
  EXPECT_TRUE(scan(ScanBox{1, 0, 1, 0}, ScanOptions{}).empty());
}

}  // namespace
}  // namespace ecq

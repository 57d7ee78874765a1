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

#include <set>

#include "ecq/error.hpp"
#include "ecq/torsion.hpp"
#include "oracle_tables.hpp"

namespace ecq {
namespace {

WeierstrassCurve from(const std::array<long, 5>& a) {
  return WeierstrassCurve::from_integers(a[0], a[1], a[2], a[3], a[4]);
}

void expect_group(const WeierstrassCurve& e, const TorsionGroup& t) {
  EXPECT_EQ(static_cast<int>(t.points.size()), t.order());
  std::set<std::string> seen;
  for (const Point& p : t.points) {
    EXPECT_TRUE(on_curve(e, p)) << to_string(p);
    seen.insert(to_string(p));
    const auto n = point_order(e, p);
    ASSERT_TRUE(n.has_value());
    EXPECT_EQ(t.exponent() % *n, 0);
  }
  EXPECT_EQ(static_cast<int>(seen.size()), t.order());
  for (const Point& p : t.points) {
    for (const Point& q : t.points) EXPECT_TRUE(seen.count(to_string(add(e, p, q)))) << "not closed";
  }
  EXPECT_TRUE(is_mazur_group(t.n1, t.n2));
  EXPECT_EQ(torsion_bound(e) % t.order(), 0);
}

TEST(Torsion, MazurRepresentatives) {
  for (const auto& row : testing::kMazurRows) {
    const WeierstrassCurve e = from(row.a);
    const TorsionGroup t = torsion_subgroup(e);
    EXPECT_EQ(t.shape(), row.torsion) << e.to_string();
    expect_group(e, t);
  }
}

TEST(Torsion, MatchesReferenceTable) {
  for (const auto& row : testing::kGlobalRows) {
    const WeierstrassCurve e = from(row.a);
    const TorsionGroup t = torsion_subgroup(e);
    EXPECT_EQ(t.shape(), row.torsion) << e.to_string();
    expect_group(e, t);
  }
}

TEST(Torsion, InvariantUnderChangeOfModel) {
  const WeierstrassCurve e = WeierstrassCurve::from_integers(1, 0, 0, -1070, 7812);
  const IsoData iso{Rational(1, 2), 3, 1, -2};
  const WeierstrassCurve f = transform(e, iso);
  const TorsionGroup t = torsion_subgroup(f);
  EXPECT_EQ(t.shape(), "Z/2xZ/8");
  expect_group(f, t);
}

TEST(Torsion, Fixtures) {
  EXPECT_EQ(torsion_subgroup(WeierstrassCurve::from_integers(0, 1, 0, 3, -1)).order(), 3);
  EXPECT_TRUE(has_point_of_order(WeierstrassCurve::from_integers(1, -1, 1, -14, 29), 9));
  EXPECT_TRUE(has_point_of_order(WeierstrassCurve::from_integers(1, 0, 1, -1, 0), 3));
  EXPECT_FALSE(has_point_of_order(WeierstrassCurve::from_integers(1, 0, 1, -1, 0), 4));
  EXPECT_THROW(has_point_of_order(WeierstrassCurve::from_integers(1, 0, 1, -1, 0), 13), Error);
}

TEST(Torsion, MazurList) {
  int count = 0;
  for (int n1 = 1; n1 <= 2; ++n1) {
    for (int n2 = 1; n2 <= 16; ++n2) count += is_mazur_group(n1, n2);
  }
  EXPECT_EQ(count, 15);
  EXPECT_FALSE(is_mazur_group(1, 11));
}

}  // namespace
}  // namespace ecq

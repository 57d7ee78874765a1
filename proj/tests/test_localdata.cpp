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

#include <random>

#include "ecq/curve.hpp"
#include "ecq/error.hpp"
#include "ecq/localdata.hpp"
#include "oracle_tables.hpp"

namespace ecq {
namespace {

WeierstrassCurve from(const std::array<long, 5>& a) {
  return WeierstrassCurve::from_integers(a[0], a[1], a[2], a[3], a[4]);
}

// Number of components of the special fibre.
int components(const KodairaType& k) {
  using Tag = KodairaType::Tag;
  switch (k.tag) {
    case Tag::I0: return 1;
    case Tag::In: return k.n;
    case Tag::II: return 1;
    case Tag::III: return 2;
    case Tag::IV: return 3;
    case Tag::I0Star: return 5;
    case Tag::InStar: return 5 + k.n;
    case Tag::IVStar: return 7;
    case Tag::IIIStar: return 8;
    case Tag::IIStar: return 9;
  }
  return 0;
}

TEST(LocalData, MatchesReferenceTable) {
  for (const auto& row : testing::kLocalRows) {
    const LocalData ld = tate(from(row.a), row.p);
    EXPECT_EQ(to_string(ld.kodaira), row.kodaira) << from(row.a).to_string() << " p=" << row.p;
    EXPECT_EQ(ld.tamagawa, row.tamagawa) << from(row.a).to_string() << " p=" << row.p;
    EXPECT_EQ(ld.conductor_exponent, row.conductor_exponent) << from(row.a).to_string() << " p=" << row.p;
  }
}

TEST(LocalData, ConductorMatchesReferenceTable) {
  for (const auto& row : testing::kGlobalRows) {
    EXPECT_EQ(conductor(from(row.a)), row.conductor) << from(row.a).to_string();
  }
}

TEST(LocalData, OggFormula) {
  for (const auto& row : testing::kGlobalRows) {
    for (const LocalData& ld : local_data(from(row.a))) {
      EXPECT_EQ(ld.conductor_exponent, ld.ord_disc - components(ld.kodaira) + 1)
          << from(row.a).to_string() << " p=" << ld.p;
    }
  }
}

TEST(LocalData, InvariantUnderChangeOfModel) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> small(-5, 5);
  for (const auto& row : testing::kGlobalRows) {
    const WeierstrassCurve e = from(row.a);
    const IsoData iso{Rational(1, 1 + (rng() % 3)), small(rng), small(rng), small(rng)};
    const std::vector<LocalData> a = local_data(e);
    const std::vector<LocalData> b = local_data(transform(e, iso));
    for (const LocalData& ld : a) {
      const LocalData other = tate(transform(e, iso), ld.p);
      EXPECT_EQ(other.kodaira, ld.kodaira);
      EXPECT_EQ(other.tamagawa, ld.tamagawa);
      EXPECT_EQ(other.conductor_exponent, ld.conductor_exponent);
      EXPECT_EQ(other.ord_disc, ld.ord_disc);
    }
    EXPECT_EQ(conductor(a), conductor(b));
  }
}

TEST(LocalData, GoodPrime) {
  const WeierstrassCurve e = WeierstrassCurve::from_integers(0, -1, 1, -10, -20);
  const LocalData ld = tate(e, 7);
  EXPECT_EQ(ld.kodaira, KodairaType{});
  EXPECT_EQ(ld.tamagawa, 1);
  EXPECT_EQ(ld.conductor_exponent, 0);
  EXPECT_EQ(ld.red, ReductionClass::good);
  EXPECT_THROW(tate(e, 4), Error);
}

TEST(LocalData, ReductionClasses) {
  // a_11(11a1) = 1 (split), a_37(37a1) = -1 (nonsplit).
  EXPECT_EQ(reduction_class(WeierstrassCurve::from_integers(0, -1, 1, -10, -20), 11),
            ReductionClass::split_multiplicative);
  EXPECT_EQ(reduction_class(WeierstrassCurve::from_integers(0, 0, 1, -1, 0), 37),
            ReductionClass::nonsplit_multiplicative);
  EXPECT_EQ(reduction_class(WeierstrassCurve::from_integers(0, 0, 1, 0, 0), 3), ReductionClass::additive);
  EXPECT_EQ(reduction_class(WeierstrassCurve::from_integers(0, 0, 1, 0, 0), 5), ReductionClass::good);
}

TEST(LocalData, Fixtures) {
  // 324.b1: II at 3, IV* at 2, prod c_p = 3.
  const auto l324 = local_data(WeierstrassCurve::from_integers(0, 0, 0, -39, 94));
  ASSERT_EQ(l324.size(), 2u);
  EXPECT_EQ(to_string(l324[0].kodaira), "IV*");
  EXPECT_EQ(to_string(l324[1].kodaira), "II");
  EXPECT_EQ(tamagawa_product(l324), 3);
  EXPECT_EQ(tamagawa_product(local_data(WeierstrassCurve::from_integers(1, -1, 1, -14, 29))), 27);
  EXPECT_EQ(tamagawa_product(local_data(WeierstrassCurve::from_integers(1, 0, 1, -1, 0))), 2);
}

TEST(LocalData, KodairaNames) {
  for (const KodairaType k : {KodairaType{}, KodairaType::I(7), KodairaType::of(KodairaType::Tag::II),
                              KodairaType::of(KodairaType::Tag::III), KodairaType::of(KodairaType::Tag::IV),
                              KodairaType::IStar(0), KodairaType::IStar(4), KodairaType::of(KodairaType::Tag::IVStar),
                              KodairaType::of(KodairaType::Tag::IIIStar), KodairaType::of(KodairaType::Tag::IIStar)}) {
    EXPECT_EQ(parse_kodaira(to_string(k)), k);
  }
  EXPECT_EQ(to_string(KodairaType::IStar(0)), "I0*");
  EXPECT_EQ(KodairaType::I(0), KodairaType{});
  EXPECT_THROW(parse_kodaira("V"), Error);
}

}  // namespace
}  // namespace ecq

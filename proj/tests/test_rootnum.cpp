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

#include "ecq/localdata.hpp"
#include "ecq/rootnum.hpp"
#include "oracle_tables.hpp"

namespace ecq {
namespace {

// Euler's criterion for an odd prime.
int legendre(long a, long p) {
  long r = 1, base = ((a % p) + p) % p, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 0 ? 0 : r == 1 ? 1 : -1;
}

TEST(RootNumber, KroneckerMatchesEuler) {
  for (long p : {3L, 5L, 7L, 11L, 13L, 101L}) {
    for (long a = -50; a <= 50; ++a) EXPECT_EQ(kronecker(a, p), legendre(a, p)) << a << " " << p;
  }
}

TEST(RootNumber, KroneckerMultiplicative) {
  for (long a = -20; a <= 20; ++a) {
    for (long m = 1; m <= 30; ++m) {
      for (long n = 1; n <= 30; ++n) EXPECT_EQ(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
    }
  }
  EXPECT_EQ(kronecker(-3, 2), -1);  // -3 = 5 mod 8
  EXPECT_EQ(kronecker(1, 2), 1);
  EXPECT_EQ(kronecker(2, 2), 0);
  EXPECT_EQ(kronecker(-1, -1), -1);
}

TEST(RootNumber, TableAgreesWhereDetermined) {
  int determined = 0;
  for (const auto& row : testing::kGlobalRows) {
    const WeierstrassCurve e = WeierstrassCurve::from_integers(row.a[0], row.a[1], row.a[2], row.a[3], row.a[4]);
    const RootNumber w = global_root_number(e);
    if (w == RootNumber::undetermined) continue;
    ++determined;
    EXPECT_EQ(static_cast<int>(w), row.root_number) << e.to_string();
  }
  EXPECT_GT(determined, 10);
}

TEST(RootNumber, Report) {
  const WeierstrassCurve e = WeierstrassCurve::from_integers(0, -1, 1, -10, -20);
  const RootNumberReport r = root_number_report(e);
  ASSERT_EQ(r.local.size(), 2u);
  EXPECT_EQ(r.local[0].first.to_string(), "inf");
  EXPECT_EQ(r.local[0].second, RootNumber::minus);
  EXPECT_EQ(r.local[1].second, RootNumber::minus);  // split at 11
  EXPECT_EQ(r.global, RootNumber::plus);
  EXPECT_EQ(global_root_number(WeierstrassCurve::from_integers(0, 0, 1, -1, 0)), RootNumber::minus);
  // I0* at 3 contributes -1.
  EXPECT_EQ(local_root_number(WeierstrassCurve::from_integers(0, 0, 1, -84, 315), Place::finite(3)),
            RootNumber::minus);
  // Additive with j = 0 at 2 is left undetermined.
  EXPECT_EQ(local_root_number(WeierstrassCurve::from_integers(0, 1, 0, 3, -1), Place::finite(2)),
            RootNumber::undetermined);
  EXPECT_EQ(RootNumber::minus * RootNumber::minus, RootNumber::plus);
  EXPECT_EQ(RootNumber::minus * RootNumber::undetermined, RootNumber::undetermined);
}

}  // namespace
}  // namespace ecq

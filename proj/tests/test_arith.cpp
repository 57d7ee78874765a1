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

#include "ecq/arith.hpp"
#include "ecq/error.hpp"

namespace ecq {
namespace {

bool slow_is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

TEST(Arith, Valuation) {
  EXPECT_EQ(valuation(Integer(48), 2), 4);
  EXPECT_EQ(valuation(Integer(-81), 3), 4);
  EXPECT_EQ(valuation(Integer(7), 5), 0);
  EXPECT_EQ(valuation(Integer(0), 5), kInfiniteValuation);
  EXPECT_EQ(valuation(Rational(5, 72), 2), -3);
  EXPECT_EQ(valuation(Rational(5, 72), 5), 1);
}

TEST(Arith, PrimalityMatchesTrialDivision) {
  for (long n = -5; n < 5000; ++n) EXPECT_EQ(is_prime(n), slow_is_prime(n)) << n;
  EXPECT_TRUE(is_prime(Integer("170141183460469231731687303715884105727")));  // 2^127 - 1
}

TEST(Arith, FactorReconstructsInput) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Integer n = Integer(static_cast<unsigned long>(rng() >> 20)) * Integer(static_cast<unsigned long>(rng() >> 34));
    if (i % 3 == 0) n = -n;
    Integer product = 1;
    Integer last = 1;
    for (const PrimePower& pp : factor(n)) {
      EXPECT_TRUE(is_prime(pp.prime));
      EXPECT_GT(pp.prime, last);
      last = pp.prime;
      product *= pow(pp.prime, pp.exponent);
    }
    EXPECT_EQ(product, abs(n));
  }
  EXPECT_TRUE(factor(Integer(1)).empty());
  EXPECT_TRUE(factor(Integer(0)).empty());
}

TEST(Arith, Squarefree) {
  EXPECT_TRUE(is_squarefree(Integer(-30)));
  EXPECT_FALSE(is_squarefree(Integer(12)));
  EXPECT_EQ(squarefree_part(Integer(-12)), -3);
  EXPECT_EQ(squarefree_part(Integer(72)), 2);
  for (long n = 1; n < 2000; ++n) {
    const Integer s = squarefree_part(Integer(n));
    EXPECT_TRUE(is_squarefree(s));
    const Integer q = n / s;
    EXPECT_TRUE(mpz_perfect_square_p(q.get_mpz_t())) << n;
  }
}

TEST(Arith, ModularHelpers) {
  EXPECT_EQ(mod(Integer(-7), Integer(5)), 3);
  EXPECT_EQ(floor_div(Integer(-7), Integer(2)), -4);
  EXPECT_EQ(mod(inverse_mod(Integer(3), Integer(7)) * 3, Integer(7)), 1);
  EXPECT_TRUE(is_perfect_cube(Integer(-27)));
  EXPECT_FALSE(is_perfect_cube(Integer(9)));
}

TEST(Arith, CubicRootsMatchBruteForce) {
  for (long c2 = -4; c2 <= 4; ++c2) {
    for (long c1 = -6; c1 <= 6; ++c1) {
      for (long c0 = -6; c0 <= 6; ++c0) {
        std::vector<Integer> expected;
        for (long x = -20; x <= 20; ++x) {
          if (x * x * x + c2 * x * x + c1 * x + c0 == 0) expected.emplace_back(x);
        }
        EXPECT_EQ(integer_roots_monic_cubic(c2, c1, c0), expected);
        for (long p : {2L, 3L, 5L, 7L}) {
          int count = 0;
          for (long x = 0; x < p; ++x) count += ((x * x * x + c2 * x * x + c1 * x + c0) % p + p) % p == 0;
          EXPECT_EQ(count_roots_cubic_mod(c2, c1, c0, p), count);
          bool quad = false;
          for (long x = 0; x < p; ++x) quad = quad || ((c2 * x * x + c1 * x + c0) % p + p) % p == 0;
          EXPECT_EQ(has_root_quadratic_mod(c2, c1, c0, p), quad);
        }
      }
    }
  }
}

TEST(Arith, PrimesUpTo) {
  const auto ps = primes_up_to(1000);
  long count = 0;
  for (long n = 0; n <= 1000; ++n) count += slow_is_prime(n);
  EXPECT_EQ(static_cast<long>(ps.size()), count);
  EXPECT_EQ(ps.front(), 2u);
  EXPECT_EQ(ps.back(), 997u);
}

TEST(Arith, ParseInteger) {
  EXPECT_EQ(parse_integer("-123456789012345678901234567890"), Integer("-123456789012345678901234567890"));
  EXPECT_EQ(parse_integer("+5"), 5);
  EXPECT_THROW(parse_integer("12a"), Error);
  EXPECT_THROW(parse_integer(""), Error);
}

}  // namespace
}  // namespace ecq

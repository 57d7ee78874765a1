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

#pragma once

// Exact integer and rational helpers shared by every module: p-adic
// valuations, primality, factorisation, squarefree parts, modular
// arithmetic and integer roots of small polynomials.

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ecq {

using Integer = mpz_class;
using Rational = mpq_class;

/// ord_p(0). Large enough that sums of a few of them cannot overflow int.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max() / 8;

int valuation(const Integer& n, const Integer& p);
int valuation(const Rational& q, const Integer& p);

bool is_prime(const Integer& n);

struct PrimePower {
  Integer prime;
  int exponent = 0;
};

/// Factorisation of |n| into ascending prime powers; factor(0) and
/// factor(+-1) are empty. Trial division followed by Pollard-Brent rho with a
/// fixed sequence of polynomial constants, so results are deterministic.
std::vector<PrimePower> factor(const Integer& n);
std::vector<Integer> prime_divisors(const Integer& n);

bool is_squarefree(const Integer& n);
/// Sign-preserving squarefree kernel class: n / m^2 with m^2 the largest square
/// dividing n. squarefree_part(-12) == -3.
Integer squarefree_part(const Integer& n);
bool is_perfect_cube(const Integer& n);

/// Least non-negative residue.
Integer mod(const Integer& a, const Integer& m);
Integer inverse_mod(const Integer& a, const Integer& m);
Integer floor_div(const Integer& a, const Integer& b);
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);

bool is_integer(const Rational& q);
Integer to_integer(const Rational& q);  // requires is_integer(q)

/// Sorted integer roots of the monic polynomial x^3 + c2 x^2 + c1 x + c0.
std::vector<Integer> integer_roots_monic_cubic(const Integer& c2, const Integer& c1,
                                               const Integer& c0);

/// Number of roots in F_p of the monic cubic x^3 + c2 x^2 + c1 x + c0.
int count_roots_cubic_mod(const Integer& c2, const Integer& c1, const Integer& c0,
                          const Integer& p);

/// Whether a x^2 + b x + c has a root in F_p (the zero polynomial counts).
bool has_root_quadratic_mod(const Integer& a, const Integer& b, const Integer& c,
                            const Integer& p);

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit);

/// Parses a decimal integer with optional sign; throws Error(parse_error).
Integer parse_integer(const std::string& text);

}  // namespace ecq

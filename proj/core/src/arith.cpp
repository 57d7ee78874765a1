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

#include "ecq/arith.hpp"

#include <algorithm>
#include <cstdlib>

#include "ecq/error.hpp"

namespace ecq {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::singular_curve: return "SingularCurve";
    case Errc::not_squarefree: return "NotSquarefree";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_order_three: return "NotOrderThree";
    case Errc::singular_family_member: return "SingularFamilyMember";
    case Errc::unreachable_branch: return "UnreachableBranch";
    case Errc::order_out_of_range: return "OrderOutOfRange";
    case Errc::odd_functional_equation: return "OddFunctionalEquation";
    case Errc::rank_positive_suspected: return "RankPositiveSuspected";
    case Errc::undetermined_parity: return "UndeterminedParity";
    case Errc::parse_error: return "ParseError";
    case Errc::invalid_argument: return "InvalidArgument";
  }
  return "Unknown";
}

int valuation(const Integer& n, const Integer& p) {
  if (n == 0) return kInfiniteValuation;
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

int valuation(const Rational& q, const Integer& p) {
  if (q == 0) return kInfiniteValuation;
  return valuation(q.get_num(), p) - valuation(q.get_den(), p);
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

namespace {

constexpr std::uint32_t kTrialLimit = 1u << 15;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kTrialLimit);
  return primes;
}

Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, ys, g = 1, q = 1, diff;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](Integer& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        const unsigned long limit = std::min(m, r - k);
        for (unsigned long i = 0; i < limit; ++i) {
          step(y);
          diff = abs(x - y);
          q = q * diff;
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        diff = abs(x - ys);
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_into(const Integer& n, std::vector<Integer>& primes) {
  if (n == 1) return;
  if (is_prime(n)) {
    primes.push_back(n);
    return;
  }
  // Pollard rho is unreliable on exact powers; peel those off first.
  const auto bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  for (unsigned long k = bits; k >= 2; --k) {
    Integer root;
    if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
      std::vector<Integer> sub;
      split_into(root, sub);
      for (unsigned long i = 0; i < k; ++i) primes.insert(primes.end(), sub.begin(), sub.end());
      return;
    }
  }
  const Integer d = pollard_brent(n);
  split_into(d, primes);
  split_into(Integer(n / d), primes);
}

}  // namespace

std::vector<PrimePower> factor(const Integer& n) {
  std::vector<PrimePower> out;
  Integer m = abs(n);
  if (m <= 1) return out;
  for (std::uint32_t p : small_primes()) {
    if (Integer(p) * p > m) break;
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
        ++e;
      }
      out.push_back({Integer(p), e});
    }
  }
  if (m > 1) {
    std::vector<Integer> rest;
    split_into(m, rest);
    std::sort(rest.begin(), rest.end());
    for (const auto& p : rest) {
      if (!out.empty() && out.back().prime == p) {
        ++out.back().exponent;
      } else {
        out.push_back({p, 1});
      }
    }
  }
  return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
  std::vector<Integer> out;
  for (const auto& pp : factor(n)) out.push_back(pp.prime);
  return out;
}

bool is_squarefree(const Integer& n) {
  if (n == 0) return false;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return false;
  }
  return true;
}

Integer squarefree_part(const Integer& n) {
  if (n == 0) return 0;
  Integer out = sgn(n) < 0 ? -1 : 1;
  for (const auto& pp : factor(n)) {
    if (pp.exponent % 2 == 1) out *= pp.prime;
  }
  return out;
}

bool is_perfect_cube(const Integer& n) {
  Integer root;
  return mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3) != 0;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw Error(Errc::invalid_argument, "element not invertible modulo " + m.get_str());
  }
  return r;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  Rational r(pow(base.get_num(), exponent), pow(base.get_den(), exponent));
  r.canonicalize();
  return r;
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

Integer to_integer(const Rational& q) {
  if (!is_integer(q)) throw Error(Errc::invalid_argument, "not an integer: " + q.get_str());
  return q.get_num();
}

namespace {

Integer eval_monic_cubic(const Integer& c2, const Integer& c1, const Integer& c0,
                         const Integer& x) {
  return ((x + c2) * x + c1) * x + c0;
}

// Integer root of g on [lo, hi] where g is monotone with the given direction.
void search_monotone(const Integer& c2, const Integer& c1, const Integer& c0, Integer lo,
                     Integer hi, bool increasing, std::vector<Integer>& out) {
  if (lo > hi) return;
  const int sign = increasing ? 1 : -1;
  auto g = [&](const Integer& x) { return sign * sgn(eval_monic_cubic(c2, c1, c0, x)); };
  if (g(lo) > 0 || g(hi) < 0) return;
  while (lo < hi) {
    Integer mid = floor_div(lo + hi, 2);
    if (g(mid) >= 0) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  if (g(lo) == 0) out.push_back(lo);
}

}  // namespace

std::vector<Integer> integer_roots_monic_cubic(const Integer& c2, const Integer& c1,
                                               const Integer& c0) {
  std::vector<Integer> out;
  Integer bound = abs(c2);
  if (abs(c1) > bound) bound = abs(c1);
  if (abs(c0) > bound) bound = abs(c0);
  bound += 1;

  const Integer disc = c2 * c2 - 3 * c1;
  if (disc <= 0) {
    search_monotone(c2, c1, c0, -bound, bound, true, out);
  } else {
    Integer s;
    mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
    // Integer brackets around the two critical points; integers strictly
    // inside a bracket are tested one by one.
    const Integer lo1 = floor_div(-c2 - s - 1, 3);
    const Integer hi1 = -floor_div(c2 + s, 3);
    const Integer lo2 = floor_div(-c2 + s, 3);
    const Integer hi2 = -floor_div(c2 - s - 1, 3);
    auto check = [&](const Integer& x) {
      if (eval_monic_cubic(c2, c1, c0, x) == 0) out.push_back(x);
    };
    search_monotone(c2, c1, c0, -bound, std::min(lo1, bound), true, out);
    if (hi1 <= lo2) {
      for (Integer x = lo1 + 1; x < hi1; ++x) check(x);
      search_monotone(c2, c1, c0, hi1, lo2, false, out);
      for (Integer x = lo2 + 1; x < hi2; ++x) check(x);
    } else {
      for (Integer x = lo1 + 1; x < hi2; ++x) check(x);
    }
    search_monotone(c2, c1, c0, std::max(hi2, Integer(-bound)), bound, true, out);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

using Poly = std::vector<Integer>;  // coefficients, low degree first

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// f mod g over F_p, g nonzero.
Poly poly_rem(Poly f, const Poly& g, const Integer& p) {
  trim(f);
  const Integer lead_inv = inverse_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const Integer factor = mod(f.back() * lead_inv, p);
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      f[shift + i] = mod(f[shift + i] - factor * g[i], p);
    }
    trim(f);
  }
  return f;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, const Integer& p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  for (auto& c : prod) c = mod(c, p);
  return poly_rem(std::move(prod), m, p);
}

Poly poly_gcd(Poly a, Poly b, const Integer& p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

int count_roots_cubic_mod(const Integer& c2, const Integer& c1, const Integer& c0,
                          const Integer& p) {
  if (p < 64) {
    int count = 0;
    for (Integer x = 0; x < p; ++x) {
      if (mod(eval_monic_cubic(c2, c1, c0, x), p) == 0) ++count;
    }
    return count;
  }
  // Distinct roots = deg gcd(f, x^p - x).
  const Poly f = {mod(c0, p), mod(c1, p), mod(c2, p), Integer(1)};
  Poly result = {Integer(1)};
  Poly base = {Integer(0), Integer(1)};
  const auto bits = mpz_sizeinbase(p.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = poly_mulmod(result, result, f, p);
    if (mpz_tstbit(p.get_mpz_t(), i)) result = poly_mulmod(result, base, f, p);
  }
  result.resize(std::max<std::size_t>(result.size(), 2), Integer(0));
  result[1] = mod(result[1] - 1, p);
  const Poly g = poly_gcd(f, result, p);
  return g.empty() ? 3 : static_cast<int>(g.size()) - 1;
}

bool has_root_quadratic_mod(const Integer& a, const Integer& b, const Integer& c,
                            const Integer& p) {
  const Integer ar = mod(a, p), br = mod(b, p), cr = mod(c, p);
  if (p == 2) {
    return cr == 0 || mod(ar + br + cr, p) == 0;
  }
  if (ar == 0) return br != 0 || cr == 0;
  const Integer disc = mod(br * br - 4 * ar * cr, p);
  return mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) != -1;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t limit) {
  std::vector<std::uint32_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

Integer parse_integer(const std::string& text) {
  std::string digits = text;
  if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
  const bool ok = !digits.empty() &&
                  std::all_of(digits.begin() + (digits.front() == '-' ? 1 : 0), digits.end(),
                              [](char ch) { return ch >= '0' && ch <= '9'; }) &&
                  digits != "-";
  Integer out;
  if (!ok || out.set_str(digits, 10) != 0) {
    throw Error(Errc::parse_error, "not an integer: '" + text + "'");
  }
  return out;
}

}  // namespace ecq

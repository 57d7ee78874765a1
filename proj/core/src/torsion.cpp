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


#include "ecq/torsion.hpp"

#include <algorithm>
#include <numeric>

#include "ecq/error.hpp"

namespace ecq {

namespace {

bool is_integral_point(const Point& p) {
  return p.at_infinity || (is_integer(p.x) && is_integer(p.y));
}

// Order of an integral point on an integral model, or 0 if it is not torsion.
// Lutz-Nagell: every multiple of a torsion point is integral.
int integral_torsion_order(const WeierstrassCurve& e, const Point& p, int bound) {
  Point q = p;
  for (int k = 1; k <= bound; ++k) {
    if (q.at_infinity) return k;
    if (!is_integral_point(q)) return 0;
    q = add(e, q, p);
  }
  return 0;
}

long count_points_mod(const WeierstrassCurve& e, long p) {
  // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6, p odd.
  const auto red = [p](const Rational& q) {
    const Integer n = mod(q.get_num() * inverse_mod(q.get_den(), Integer(p)), Integer(p));
    return n.get_si();
  };
  const long b2 = red(e.b2()), b4 = red(2 * e.b4()), b6 = red(e.b6());
  std::vector<signed char> chi(p, -1);
  chi[0] = 0;
  for (long y = 1; y < p; ++y) chi[y * y % p] = 1;
  long count = p + 1;
  for (long x = 0; x < p; ++x) {
    const long g = (((4 * x + b2) % p * x + b4) % p * x + b6) % p;
    count += chi[g];
  }
  return count;
}

}  // namespace

std::string TorsionGroup::shape() const {
  if (n1 == 1) return "Z/" + std::to_string(n2);
  return "Z/" + std::to_string(n1) + "xZ/" + std::to_string(n2);
}

bool is_mazur_group(int n1, int n2) {
  if (n1 == 1) return (n2 >= 1 && n2 <= 10) || n2 == 12;
  return n1 == 2 && (n2 == 2 || n2 == 4 || n2 == 6 || n2 == 8);
}

Integer torsion_bound(const WeierstrassCurve& e, int primes) {
  const Rational& disc = e.discriminant();
  long g = 0;
  int used = 0;
  for (std::uint32_t p : primes_up_to(2000)) {
    if (p < 3) continue;
    const Integer zp(p);
    bool good = valuation(disc, zp) == 0;
    for (const auto& a : e.a_invariants()) good = good && valuation(a, zp) >= 0;
    if (!good) continue;
    g = std::gcd(g, count_points_mod(e, p));
    if (++used >= primes || g == 1) break;
  }
  return Integer(g);
}

TorsionGroup torsion_subgroup(const WeierstrassCurve& e) {
  const ModelWithIso minimal = minimal_model(e);
  const Integer bound = torsion_bound(minimal.curve);
  TorsionGroup out;
  out.points.push_back(Point::infinity());
  if (bound == 1) return out;

  const ModelWithIso shortm = short_model(minimal.curve);
  const WeierstrassCurve& s = shortm.curve;  // Y^2 = X^3 + A X + B, integral
  const Integer A = to_integer(s.a4());
  const Integer B = to_integer(s.a6());
  const IsoData to_input = minimal.iso.then(shortm.iso);  // input -> short model
  const int max_order = static_cast<int>(std::min<long>(bound.get_si(), 12));

  // Y = 0 or Y^2 | 4A^3 + 27B^2 = -2^8 3^12 disc(minimal).
  std::vector<PrimePower> fac = factor(to_integer(minimal.curve.discriminant()));
  const auto bump = [&fac](long prime, int e2) {
    for (auto& pp : fac) {
      if (pp.prime == prime) {
        pp.exponent += e2;
        return;
      }
    }
    fac.push_back({Integer(prime), e2});
  };
  bump(2, 8);
  bump(3, 12);
  std::vector<Integer> divisors{1};
  for (const auto& [p, k] : fac) {
    const std::size_t base = divisors.size();
    Integer pk = 1;
    for (int j = 1; 2 * j <= k; ++j) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divisors.push_back(divisors[i] * pk);
    }
  }
  std::vector<Integer> candidates_y{0};
  candidates_y.insert(candidates_y.end(), divisors.begin(), divisors.end());

  std::vector<Point> found;
  for (const Integer& y : candidates_y) {
    for (const Integer& x : integer_roots_monic_cubic(0, A, B - y * y)) {
      for (const Integer& yy : y == 0 ? std::vector<Integer>{0} : std::vector<Integer>{y, -y}) {
        const Point p = Point::affine(Rational(x), Rational(yy));
        const int ord = integral_torsion_order(s, p, max_order);
        if (ord > 1 && bound % ord == 0) found.push_back(p);
      }
    }
  }

  const int total = static_cast<int>(found.size()) + 1;
  int two_torsion = 0;
  for (const Point& p : found) two_torsion += p.y == 0 ? 1 : 0;
  out.n1 = two_torsion == 3 ? 2 : 1;
  out.n2 = total / out.n1;
  if (!is_mazur_group(out.n1, out.n2) || out.n1 * out.n2 != total) {
    throw Error(Errc::invalid_argument, "internal: torsion search produced " +
                                            std::to_string(total) + " points on " + e.to_string());
  }

  std::sort(found.begin(), found.end(), [](const Point& l, const Point& r) {
    if (l.x != r.x) return l.x < r.x;
    return l.y < r.y;
  });
  const Point* gen = nullptr;
  for (const Point& p : found) {
    if (integral_torsion_order(s, p, out.n2) == out.n2) {
      gen = &p;
      break;
    }
  }
  if (gen) out.generators.push_back(unmap_point(*gen, to_input));
  if (out.n1 == 2) {
    const Point half = multiply(s, *gen, out.n2 / 2);
    for (const Point& p : found) {
      if (p.y == 0 && !(p == half)) {
        out.generators.push_back(unmap_point(p, to_input));
        break;
      }
    }
  }
  for (const Point& p : found) out.points.push_back(unmap_point(p, to_input));
  return out;
}

bool has_point_of_order(const TorsionGroup& t, int n) {
  if (n < 2 || n > 12) {
    throw Error(Errc::order_out_of_range, "order " + std::to_string(n) + " outside 2..12");
  }
  return t.exponent() % n == 0;
}

bool has_point_of_order(const WeierstrassCurve& e, int n) {
  if (n < 2 || n > 12) {
    throw Error(Errc::order_out_of_range, "order " + std::to_string(n) + " outside 2..12");
  }
  return has_point_of_order(torsion_subgroup(e), n);
}

}  // namespace ecq

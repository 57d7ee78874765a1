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

#include "ecq/curve.hpp"

#include "ecq/error.hpp"

namespace ecq {

IsoData IsoData::then(const IsoData& next) const {
  const Rational u2 = u * u;
  return IsoData{u * next.u, r + u2 * next.r, s + u * next.s,
                 t + u2 * s * next.r + u2 * u * next.t};
}

IsoData IsoData::inverse() const {
  const Rational u2 = u * u;
  return IsoData{1 / u, -r / u2, -s / u, (r * s - t) / (u2 * u)};
}

WeierstrassCurve::WeierstrassCurve(const AInvariants& a) : a_(a) {
  const auto& [a1, a2, a3, a4, a6] = a_;
  b2_ = a1 * a1 + 4 * a2;
  b4_ = 2 * a4 + a1 * a3;
  b6_ = a3 * a3 + 4 * a6;
  b8_ = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  c4_ = b2_ * b2_ - 24 * b4_;
  c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
  disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
  if (disc_ == 0) throw Error(Errc::singular_curve, "discriminant vanishes for " + to_string());
  j_ = c4_ * c4_ * c4_ / disc_;
}

WeierstrassCurve WeierstrassCurve::from_integers(long a1, long a2, long a3, long a4, long a6) {
  return WeierstrassCurve({Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)});
}

bool WeierstrassCurve::is_integral() const {
  for (const auto& a : a_) {
    if (!ecq::is_integer(a)) return false;
  }
  return true;
}

std::string WeierstrassCurve::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (i) out += ',';
    out += a_[i].get_str();
  }
  return out + "]";
}

WeierstrassCurve invariants(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& a4, const Rational& a6) {
  return WeierstrassCurve({a1, a2, a3, a4, a6});
}

WeierstrassCurve transform(const WeierstrassCurve& e, const IsoData& iso) {
  const auto& [a1, a2, a3, a4, a6] = e.a_invariants();
  const auto& [u, r, s, t] = iso;
  if (u == 0) throw Error(Errc::invalid_argument, "u must be nonzero");
  const Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
  return WeierstrassCurve({
      (a1 + 2 * s) / u,
      (a2 - s * a1 + 3 * r - s * s) / u2,
      (a3 + r * a1 + 2 * t) / u3,
      (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) / u4,
      (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) / u6,
  });
}

namespace {

// Kraus: (c4, c6) come from an integral model iff v3(c6) != 2 and either
// c6 = -1 mod 4, or v2(c4) >= 4 and c6 = 0 or 8 mod 32.
bool kraus_at_3(const Integer& c6) { return valuation(c6, Integer(3)) != 2; }

bool kraus_at_2(const Integer& c4, const Integer& c6) {
  if (mod(c6, 4) == 3) return true;
  if (valuation(c4, Integer(2)) < 4) return false;
  const Integer r = mod(c6, 32);
  return r == 0 || r == 8;
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
    throw Error(Errc::invalid_argument, a.get_str() + " is not divisible by " + b.get_str());
  }
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// u with a_i u^i integral for every i.
Integer integralizing_scale(const WeierstrassCurve& e) {
  Integer m = 1;
  for (const auto& a : e.a_invariants()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a.get_den_mpz_t());
  return m;
}

// Solves for (r, s, t) given u, assuming target is isomorphic to e via u.
IsoData iso_between(const WeierstrassCurve& e, const WeierstrassCurve& target, const Rational& u) {
  const Rational s = (u * target.a1() - e.a1()) / 2;
  const Rational r = (u * u * target.a2() - e.a2() + s * e.a1() + s * s) / 3;
  const Rational t = (u * u * u * target.a3() - e.a3() - r * e.a1()) / 2;
  return IsoData{u, r, s, t};
}

}  // namespace

WeierstrassCurve curve_from_c_invariants(const Integer& c4, const Integer& c6) {
  if (!kraus_at_3(c6) || !kraus_at_2(c4, c6)) {
    throw Error(Errc::invalid_argument,
                "c-invariants (" + c4.get_str() + ", " + c6.get_str() + ") fail Kraus' conditions");
  }
  Integer b2 = mod(-c6, 12);
  if (b2 > 6) b2 -= 12;
  const Integer b4 = exact_div(b2 * b2 - c4, 24);
  const Integer b6 = exact_div(-b2 * b2 * b2 + 36 * b2 * b4 - c6, 216);
  const Integer a1 = mod(b2, 2);
  const Integer a2 = exact_div(b2 - a1, 4);
  const Integer a3 = mod(b6, 2);
  const Integer a4 = exact_div(b4 - a1 * a3, 2);
  const Integer a6 = exact_div(b6 - a3, 4);
  return WeierstrassCurve({Rational(a1), Rational(a2), Rational(a3), Rational(a4), Rational(a6)});
}

ModelWithIso minimal_model(const WeierstrassCurve& e) {
  const Integer m = integralizing_scale(e);
  const Rational to_integral(Integer(1), m);
  const WeierstrassCurve integral = transform(e, IsoData::scaling(to_integral));

  const Integer c4 = to_integer(integral.c4());
  const Integer c6 = to_integer(integral.c6());
  const Integer disc = to_integer(integral.discriminant());

  Integer u = 1;
  for (const auto& [p, vdisc] : factor(disc)) {
    if (vdisc < 12) continue;
    int e_max = vdisc / 12;
    e_max = std::min(e_max, valuation(c4, p) / 4);
    e_max = std::min(e_max, valuation(c6, p) / 6);
    for (int k = e_max; k > 0; --k) {
      const Integer pk = pow(p, static_cast<unsigned long>(k));
      const Integer c4k = exact_div(c4, pow(pk, 4));
      const Integer c6k = exact_div(c6, pow(pk, 6));
      const bool ok = (p == 2) ? kraus_at_2(c4k, c6k) : (p == 3) ? kraus_at_3(c6k) : true;
      if (ok) {
        u *= pk;
        break;
      }
    }
  }
  const WeierstrassCurve reduced =
      curve_from_c_invariants(exact_div(c4, pow(u, 4)), exact_div(c6, pow(u, 6)));
  const IsoData iso = iso_between(e, reduced, to_integral * u);
  if (!(transform(e, iso) == reduced)) {
    throw Error(Errc::invalid_argument, "internal: minimal model isomorphism mismatch for " +
                                            e.to_string());
  }
  return {reduced, iso};
}

ModelWithIso short_model(const WeierstrassCurve& e) {
  const IsoData iso{Rational(1, 6), -e.b2() / 12, -e.a1() / 2, e.a1() * e.b2() / 24 - e.a3() / 2};
  return {transform(e, iso), iso};
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Integer& d) {
  if (!is_squarefree(d)) {
    throw Error(Errc::not_squarefree, "twist parameter " + d.get_str() + " is not squarefree");
  }
  const Rational dq(d);
  const Rational d2 = dq * dq, d3 = d2 * dq;
  if (e.a1() == 0 && e.a2() == 0 && e.a3() == 0) {
    return WeierstrassCurve({0, 0, 0, d2 * e.a4(), d3 * e.a6()});
  }
  return WeierstrassCurve({0, 0, 0, -27 * d2 * e.c4(), -54 * d3 * e.c6()});
}

bool isomorphic(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs) {
  return minimal_model(lhs).curve == minimal_model(rhs).curve;
}

std::string to_string(const Point& p) {
  if (p.at_infinity) return "O";
  return "(" + p.x.get_str() + "," + p.y.get_str() + ")";
}

bool on_curve(const WeierstrassCurve& e, const Point& p) {
  if (p.at_infinity) return true;
  const auto& [a1, a2, a3, a4, a6] = e.a_invariants();
  const Rational& x = p.x;
  const Rational& y = p.y;
  return y * y + a1 * x * y + a3 * y == ((x + a2) * x + a4) * x + a6;
}

Point negate(const WeierstrassCurve& e, const Point& p) {
  if (p.at_infinity) return p;
  return Point::affine(p.x, -p.y - e.a1() * p.x - e.a3());
}

Point add(const WeierstrassCurve& e, const Point& p, const Point& q) {
  if (p.at_infinity) return q;
  if (q.at_infinity) return p;
  const auto& [a1, a2, a3, a4, a6] = e.a_invariants();
  Rational lambda, nu;
  if (p.x == q.x) {
    if (p.y + q.y + a1 * q.x + a3 == 0) return Point::infinity();
    const Rational denom = 2 * p.y + a1 * p.x + a3;
    lambda = (3 * p.x * p.x + 2 * a2 * p.x + a4 - a1 * p.y) / denom;
    nu = (-p.x * p.x * p.x + a4 * p.x + 2 * a6 - a3 * p.y) / denom;
  } else {
    const Rational dx = q.x - p.x;
    lambda = (q.y - p.y) / dx;
    nu = (p.y * q.x - q.y * p.x) / dx;
  }
  Rational x3 = lambda * lambda + a1 * lambda - a2 - p.x - q.x;
  Rational y3 = -(lambda + a1) * x3 - nu - a3;
  return Point::affine(std::move(x3), std::move(y3));
}

Point multiply(const WeierstrassCurve& e, const Point& p, long n) {
  Point base = n < 0 ? negate(e, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  Point acc = Point::infinity();
  while (k) {
    if (k & 1) acc = add(e, acc, base);
    k >>= 1;
    if (k) base = add(e, base, base);
  }
  return acc;
}

std::optional<int> point_order(const WeierstrassCurve& e, const Point& p, int max_order) {
  Point q = p;
  for (int k = 1; k <= max_order; ++k) {
    if (q.at_infinity) return k;
    q = add(e, q, p);
  }
  return std::nullopt;
}

Point map_point(const Point& p, const IsoData& iso) {
  if (p.at_infinity) return p;
  const Rational u2 = iso.u * iso.u;
  const Rational dx = p.x - iso.r;
  return Point::affine(dx / u2, (p.y - iso.s * dx - iso.t) / (u2 * iso.u));
}

Point unmap_point(const Point& p, const IsoData& iso) {
  if (p.at_infinity) return p;
  const Rational u2 = iso.u * iso.u;
  return Point::affine(u2 * p.x + iso.r, u2 * iso.u * p.y + iso.s * u2 * p.x + iso.t);
}

}  // namespace ecq

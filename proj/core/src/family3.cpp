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


#include "ecq/family3.hpp"

#include <algorithm>

#include "ecq/error.hpp"

namespace ecq {

FamilyCurve::FamilyCurve(Integer a, Integer b, NoCheck) : a_(std::move(a)), b_(std::move(b)) {
  d_ = a_ * a_ * a_ - 27 * b_;
  if (b_ == 0 || d_ == 0) {
    throw Error(Errc::singular_family_member, "(" + a_.get_str() + "," + b_.get_str() + ")");
  }
  if (b_ < 0) throw Error(Errc::invalid_argument, "family parameter b must be positive");
  delta_ = b_ * b_ * b_ * d_;
  c4_ = a_ * (a_ * a_ * a_ - 24 * b_);
}

FamilyCurve::FamilyCurve(Integer a, Integer b) : FamilyCurve(std::move(a), std::move(b), NoCheck{}) {
  if (!is_normalized(a_, b_)) {
    throw Error(Errc::invalid_argument, to_string() + " is not normalized");
  }
}

FamilyCurve FamilyCurve::unchecked(Integer a, Integer b) {
  return FamilyCurve(std::move(a), std::move(b), NoCheck{});
}

WeierstrassCurve FamilyCurve::curve() const {
  return WeierstrassCurve({Rational(a_), 0, Rational(b_), 0, 0});
}

std::string FamilyCurve::to_string() const { return "(" + a_.get_str() + "," + b_.get_str() + ")"; }

bool is_normalized(const Integer& a, const Integer& b) {
  if (b <= 0 || a * a * a == 27 * b) return false;
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  for (const auto& q : prime_divisors(g)) {
    if (valuation(b, q) >= 3) return false;
  }
  return true;
}

namespace {

struct Scaled {
  Integer a, b;
  Rational u;  // c -> c / u, d -> d / u^3
};

Scaled normalize_scaled(const Rational& c, const Rational& d) {
  if (d == 0 || c * c * c == 27 * d) {
    throw Error(Errc::singular_family_member,
                "(" + c.get_str() + "," + d.get_str() + ") is singular");
  }
  // Clear denominators: c -> m c, d -> m^3 d.
  const Integer m = c.get_den() * d.get_den();
  Integer a = m * c.get_num() / c.get_den();
  Integer b = m * m * m * d.get_num() / d.get_den();
  Rational u(Integer(1), m);
  if (b < 0) {
    a = -a;
    b = -b;
    u = -u;
  }
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  for (const auto& q : prime_divisors(g)) {
    const int k = std::min(valuation(a, q), valuation(b, q) / 3);
    if (k <= 0) continue;
    const Integer qk = pow(q, static_cast<unsigned long>(k));
    a /= qk;
    b /= qk * qk * qk;
    u *= qk;
  }
  return {a, b, u};
}

}  // namespace

FamilyCurve normalize(const Rational& c, const Rational& d) {
  Scaled s = normalize_scaled(c, d);
  return FamilyCurve(std::move(s.a), std::move(s.b));
}

FamilyModel family_model(const WeierstrassCurve& e, const Point& p) {
  if (p.at_infinity || !on_curve(e, p) || point_order(e, p, 3) != 3) {
    throw Error(Errc::not_order_three, to_string(p) + " is not a point of order 3 on " + e.to_string());
  }
  // P to the origin, then kill a4 with s; the flex tangent forces a2 = a6 = 0.
  const IsoData shift{1, p.x, 0, p.y};
  const WeierstrassCurve e1 = transform(e, shift);
  const IsoData shear{1, 0, e1.a4() / e1.a3(), 0};
  const WeierstrassCurve e2 = transform(e1, shear);
  if (e2.a2() != 0 || e2.a4() != 0 || e2.a6() != 0) {
    throw Error(Errc::not_order_three, "internal: flex normal form failed for " + e.to_string());
  }
  Scaled s = normalize_scaled(e2.a1(), e2.a3());
  FamilyCurve f(std::move(s.a), std::move(s.b));
  return {f, shift.then(shear).then(IsoData::scaling(s.u))};
}

FamilyCurve from_curve(const WeierstrassCurve& e, const Point& p) { return family_model(e, p).family; }

bool ClassifyResult::contains(const KodairaType& k) const {
  return std::find(candidates.begin(), candidates.end(), k) != candidates.end();
}

ClassifyResult classify(const FamilyCurve& f, const Integer& p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, p.get_str() + " is not prime");
  using Tag = KodairaType::Tag;
  const int oa = valuation(f.a(), p);  // kInfiniteValuation when a = 0
  const int ob = valuation(f.b(), p);
  const long three_oa = oa >= kInfiniteValuation ? kInfiniteValuation : 3L * oa;
  ClassifyResult out;

  if (three_oa < ob) {
    out.candidates = {KodairaType::I(3 * ob)};
    out.tamagawa = 3 * ob;
    out.red = ReductionClass::split_multiplicative;
    return out;
  }
  if (three_oa == ob) {
    const int od = valuation(f.D(), p);
    out.candidates = {KodairaType::I(od)};
    if (od == 0) {
      out.tamagawa = 1;
      out.red = ReductionClass::good;
    }
    return out;
  }
  if (ob == 0) {
    if (p != 3) {
      out.candidates = {KodairaType{}};
      out.tamagawa = 1;
      out.red = ReductionClass::good;
      return out;
    }
    out.red = ReductionClass::additive;
    const int n = valuation(f.D(), p);
    if (n == 3) {
      out.candidates = {KodairaType::of(Tag::II), KodairaType::of(Tag::III)};
    } else if (n == 4) {
      out.candidates = {KodairaType::of(Tag::II)};
    } else if (n == 5) {
      out.candidates = {KodairaType::of(Tag::IV)};
    } else if (n >= 6) {
      out.candidates = {KodairaType::IStar(n - 6)};
    } else {
      throw Error(Errc::unreachable_branch, "ord_3(D) < 3 for " + f.to_string());
    }
    return out;
  }
  out.red = ReductionClass::additive;
  out.tamagawa = 3;
  if (ob == 1) {
    out.candidates = {KodairaType::of(Tag::IV)};
  } else if (ob == 2) {
    out.candidates = {KodairaType::of(Tag::IVStar)};
  } else {
    throw Error(Errc::unreachable_branch,
                f.to_string() + " violates normalization at " + p.get_str());
  }
  return out;
}

WeierstrassCurve dual(const FamilyCurve& f) {
  const Integer& a = f.a();
  const Integer& b = f.b();
  if (b == 1) return WeierstrassCurve({Rational(a + 6), 0, Rational(a * a + 3 * a + 9), 0, 0});
  return WeierstrassCurve({Rational(a), 0, Rational(-9 * b), 0, Rational(-(a * a * a + 27 * b) * b)});
}

}  // namespace ecq

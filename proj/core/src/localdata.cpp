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


#include "ecq/localdata.hpp"

#include <algorithm>
#include <utility>

#include "ecq/error.hpp"

namespace ecq {

namespace {

using Tag = KodairaType::Tag;

constexpr std::pair<Tag, std::string_view> kNames[] = {
    {Tag::IVStar, "IV*"}, {Tag::IIIStar, "III*"}, {Tag::IIStar, "II*"}, {Tag::IV, "IV"},
    {Tag::III, "III"},    {Tag::II, "II"},
};

// Integral Weierstrass model with in-place unimodular changes of variables.
struct Model {
  Integer a1, a2, a3, a4, a6;

  Integer b2() const { return a1 * a1 + 4 * a2; }
  Integer b4() const { return 2 * a4 + a1 * a3; }
  Integer b6() const { return a3 * a3 + 4 * a6; }
  Integer b8() const { return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
  Integer c4() const {
    const Integer x = b2();
    return x * x - 24 * b4();
  }
  Integer disc() const {
    const Integer x2 = b2(), x4 = b4(), x6 = b6(), x8 = b8();
    return -x2 * x2 * x8 - 8 * x4 * x4 * x4 - 27 * x6 * x6 + 9 * x2 * x4 * x6;
  }

  void rst(const Integer& r, const Integer& s, const Integer& t) {
    const Integer n1 = a1 + 2 * s;
    const Integer n2 = a2 - s * a1 + 3 * r - s * s;
    const Integer n3 = a3 + r * a1 + 2 * t;
    const Integer n4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    const Integer n6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    a1 = n1;
    a2 = n2;
    a3 = n3;
    a4 = n4;
    a6 = n6;
  }

  // a_i -> a_i / p^i; only valid when the division is exact.
  void scale_down(const Integer& p) {
    Integer q = p;
    mpz_divexact(a1.get_mpz_t(), a1.get_mpz_t(), q.get_mpz_t());
    q *= p;
    mpz_divexact(a2.get_mpz_t(), a2.get_mpz_t(), q.get_mpz_t());
    q *= p;
    mpz_divexact(a3.get_mpz_t(), a3.get_mpz_t(), q.get_mpz_t());
    q *= p;
    mpz_divexact(a4.get_mpz_t(), a4.get_mpz_t(), q.get_mpz_t());
    q *= p * p;
    mpz_divexact(a6.get_mpz_t(), a6.get_mpz_t(), q.get_mpz_t());
  }
};

Model integral_model(const WeierstrassCurve& e) {
  Integer m = 1;
  for (const auto& a : e.a_invariants()) mpz_lcm(m.get_mpz_t(), m.get_mpz_t(), a.get_den_mpz_t());
  const WeierstrassCurve w = transform(e, IsoData::scaling(Rational(Integer(1), m)));
  return Model{to_integer(w.a1()), to_integer(w.a2()), to_integer(w.a3()), to_integer(w.a4()),
               to_integer(w.a6())};
}

Integer exact(const Integer& a, const Integer& b) {
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

LocalData tate_integral(Model c, const Integer& p) {
  const auto pdiv = [&](const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) != 0; };
  const auto pval = [&](const Integer& x) { return valuation(x, p); };
  const Integer pp = p * p;
  const bool two = p == 2, three = p == 3;
  const Integer half = two ? Integer(0) : (p + 1) / 2;

  for (;;) {
    LocalData out;
    out.p = p;
    const int nu = pval(c.disc());
    out.ord_disc = nu;
    if (nu == 0) return out;

    // Move the singular point of the reduction to (0, 0).
    Integer r, t;
    const Integer b2 = c.b2();
    if (two) {
      if (pdiv(b2)) {
        r = mod(c.a4, p);
        t = mod(((r + c.a2) * r + c.a4) * r + c.a6, p);
      } else {
        r = mod(c.a3, p);  // a1 is odd, so 1/a1 = 1 mod 2
        t = mod(c.a4 + r * r, p);
      }
    } else if (three) {
      r = pdiv(b2) ? mod(-c.b6(), p) : mod(-b2 * c.b4(), p);  // 1/b2 = b2 mod 3
      t = mod(c.a1 * r + c.a3, p);
    } else {
      const Integer c4 = c.c4();
      if (pdiv(c4)) {
        r = mod(-b2 * inverse_mod(Integer(12), p), p);
      } else {
        const Integer c6 = -b2 * b2 * b2 + 36 * b2 * c.b4() - 216 * c.b6();
        r = mod(-(c6 + b2 * c4) * inverse_mod(12 * c4, p), p);
      }
      t = mod(-half * (c.a1 * r + c.a3), p);
    }
    c.rst(r, 0, t);

    if (!pdiv(c.c4())) {
      out.kodaira = KodairaType::I(nu);
      out.conductor_exponent = 1;
      if (has_root_quadratic_mod(1, c.a1, -c.a2, p)) {
        out.red = ReductionClass::split_multiplicative;
        out.tamagawa = nu;
      } else {
        out.red = ReductionClass::nonsplit_multiplicative;
        out.tamagawa = nu % 2 == 0 ? 2 : 1;
      }
      return out;
    }

    out.red = ReductionClass::additive;
    if (pval(c.a6) < 2) {
      out.kodaira = KodairaType::of(Tag::II);
      out.conductor_exponent = nu;
      out.tamagawa = 1;
      return out;
    }
    if (pval(c.b8()) < 3) {
      out.kodaira = KodairaType::of(Tag::III);
      out.conductor_exponent = nu - 1;
      out.tamagawa = 2;
      return out;
    }
    if (pval(c.b6()) < 3) {
      out.kodaira = KodairaType::of(Tag::IV);
      out.conductor_exponent = nu - 2;
      out.tamagawa = has_root_quadratic_mod(1, exact(c.a3, p), -exact(c.a6, pp), p) ? 3 : 1;
      return out;
    }

    // Now p | a1, a2 ; p^2 | a3, a4 ; p^3 | a6.
    Integer s;
    if (two) {
      s = mod(c.a2, p);
      t = p * mod(exact(c.a6, pp), p);
    } else if (three) {
      s = c.a1;
      t = c.a3;
    } else {
      s = mod(-c.a1 * half, p);
      t = mod(-c.a3 * half, pp);
    }
    c.rst(0, s, t);

    const Integer b = exact(c.a2, p);
    const Integer cc = exact(c.a4, pp);
    const Integer d = exact(c.a6, pp * p);
    const Integer w = 27 * d * d - b * b * cc * cc + 4 * b * b * b * d - 18 * b * cc * d + 4 * cc * cc * cc;
    const Integer x = 3 * cc - b * b;

    if (!pdiv(w)) {
      out.kodaira = KodairaType::IStar(0);
      out.conductor_exponent = nu - 4;
      out.tamagawa = 1 + count_roots_cubic_mod(b, cc, d, p);
      return out;
    }

    if (!pdiv(x)) {
      // Double root: move it to 0 and peel off the chain of components.
      if (two) {
        r = mod(cc, p);
      } else if (three) {
        r = mod(b * cc, p);
      } else {
        r = mod((b * cc - 9 * d) * inverse_mod(2 * x, p), p);
      }
      c.rst(p * r, 0, 0);
      int ix = 3, iy = 3;
      Integer mx = pp, my = pp;
      for (;;) {
        const Integer a2t = exact(c.a2, p);
        Integer a3t = exact(c.a3, my);
        Integer a4t = exact(exact(c.a4, p), mx);
        Integer a6t = exact(exact(c.a6, mx), my);
        if (pdiv(a3t * a3t + 4 * a6t)) {
          t = two ? my * mod(a6t, p) : my * mod(-a3t * half, p);
          c.rst(0, 0, t);
          my *= p;
          ++iy;
          a3t = exact(c.a3, my);
          a4t = exact(exact(c.a4, p), mx);
          a6t = exact(exact(c.a6, mx), my);
          if (pdiv(a4t * a4t - 4 * a6t * a2t)) {
            r = two ? mx * mod(a6t * a2t, p) : mx * mod(-a4t * inverse_mod(2 * a2t, p), p);
            c.rst(r, 0, 0);
            mx *= p;
            ++ix;
          } else {
            out.tamagawa = has_root_quadratic_mod(a2t, a4t, a6t, p) ? 4 : 2;
            break;
          }
        } else {
          out.tamagawa = has_root_quadratic_mod(1, a3t, -a6t, p) ? 4 : 2;
          break;
        }
      }
      out.kodaira = KodairaType::IStar(ix + iy - 5);
      out.conductor_exponent = nu - ix - iy + 1;
      return out;
    }

    // Triple root: move it to 0.
    if (two) {
      r = mod(b, p);
    } else if (three) {
      r = mod(-d, p);
    } else {
      r = mod(-b * inverse_mod(Integer(3), p), p);
    }
    c.rst(p * r, 0, 0);
    const Integer x3 = exact(c.a3, pp);
    const Integer x6 = exact(c.a6, pp * pp);
    if (!pdiv(x3 * x3 + 4 * x6)) {
      out.kodaira = KodairaType::of(Tag::IVStar);
      out.conductor_exponent = nu - 6;
      out.tamagawa = has_root_quadratic_mod(1, x3, -x6, p) ? 3 : 1;
      return out;
    }
    t = two ? Integer(-pp * mod(x6, p)) : Integer(-pp * mod(x3 * half, p));
    c.rst(0, 0, t);
    if (pval(c.a4) < 4) {
      out.kodaira = KodairaType::of(Tag::IIIStar);
      out.conductor_exponent = nu - 7;
      out.tamagawa = 2;
      return out;
    }
    if (pval(c.a6) < 6) {
      out.kodaira = KodairaType::of(Tag::IIStar);
      out.conductor_exponent = nu - 8;
      out.tamagawa = 1;
      return out;
    }
    // Not minimal at p.
    c.scale_down(p);
  }
}

}  // namespace

std::string to_string(const KodairaType& k) {
  switch (k.tag) {
    case Tag::I0: return "I0";
    case Tag::In: return "I" + std::to_string(k.n);
    case Tag::I0Star: return "I0*";
    case Tag::InStar: return "I" + std::to_string(k.n) + "*";
    default: break;
  }
  for (const auto& [tag, name] : kNames) {
    if (tag == k.tag) return std::string(name);
  }
  return "?";
}

KodairaType parse_kodaira(std::string_view text) {
  for (const auto& [tag, name] : kNames) {
    if (text == name) return KodairaType::of(tag);
  }
  const bool star = !text.empty() && text.back() == '*';
  const std::string_view digits = text.substr(1, text.size() - 1 - (star ? 1 : 0));
  if (text.size() >= 2 && text.front() == 'I' && !digits.empty() && digits.size() < 9 &&
      std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) &&
      (digits.size() == 1 || digits.front() != '0')) {
    const int n = std::stoi(std::string(digits));
    return star ? KodairaType::IStar(n) : KodairaType::I(n);
  }
  throw Error(Errc::parse_error, "not a Kodaira symbol: '" + std::string(text) + "'");
}

std::string_view to_string(ReductionClass r) {
  switch (r) {
    case ReductionClass::good: return "good";
    case ReductionClass::split_multiplicative: return "split_mult";
    case ReductionClass::nonsplit_multiplicative: return "nonsplit_mult";
    case ReductionClass::additive: return "additive";
  }
  return "?";
}

LocalData tate(const WeierstrassCurve& e, const Integer& p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, p.get_str() + " is not prime");
  return tate_integral(integral_model(e), p);
}

std::vector<LocalData> local_data(const WeierstrassCurve& e) {
  const Model m = integral_model(e);
  std::vector<LocalData> out;
  for (const auto& [p, v] : factor(m.disc())) {
    LocalData ld = tate_integral(m, p);
    if (ld.red != ReductionClass::good) out.push_back(std::move(ld));
  }
  return out;
}

Integer conductor(const std::vector<LocalData>& locals) {
  Integer n = 1;
  for (const auto& ld : locals) n *= pow(ld.p, static_cast<unsigned long>(ld.conductor_exponent));
  return n;
}

Integer conductor(const WeierstrassCurve& e) { return conductor(local_data(e)); }

Integer tamagawa_product(const std::vector<LocalData>& locals) {
  Integer n = 1;
  for (const auto& ld : locals) n *= ld.tamagawa;
  return n;
}

ReductionClass reduction_class(const WeierstrassCurve& e, const Integer& p) { return tate(e, p).red; }

}  // namespace ecq

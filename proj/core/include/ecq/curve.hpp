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

#include <array>
#include <compare>
#include <optional>
#include <string>

#include "ecq/arith.hpp"

namespace ecq {

/// Change of variables x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct IsoData {
  Rational u{1};
  Rational r{0};
  Rational s{0};
  Rational t{0};

  static IsoData identity() { return {}; }
  /// Scaling only: a_i' = a_i / u^i.
  static IsoData scaling(const Rational& u) { return {u, 0, 0, 0}; }

  bool is_identity() const { return u == 1 && r == 0 && s == 0 && t == 0; }

  /// The transform obtained by applying *this first and then `next`.
  IsoData then(const IsoData& next) const;
  IsoData inverse() const;

  friend bool operator==(const IsoData&, const IsoData&) = default;
};

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q, nonsingular.
class WeierstrassCurve {
 public:
  using AInvariants = std::array<Rational, 5>;

  /// Throws Error(singular_curve) when the discriminant vanishes.
  explicit WeierstrassCurve(const AInvariants& a);
  static WeierstrassCurve from_integers(long a1, long a2, long a3, long a4, long a6);

  const AInvariants& a_invariants() const { return a_; }
  const Rational& a1() const { return a_[0]; }
  const Rational& a2() const { return a_[1]; }
  const Rational& a3() const { return a_[2]; }
  const Rational& a4() const { return a_[3]; }
  const Rational& a6() const { return a_[4]; }

  const Rational& b2() const { return b2_; }
  const Rational& b4() const { return b4_; }
  const Rational& b6() const { return b6_; }
  const Rational& b8() const { return b8_; }
  const Rational& c4() const { return c4_; }
  const Rational& c6() const { return c6_; }
  const Rational& discriminant() const { return disc_; }
  const Rational& j_invariant() const { return j_; }

  bool is_integral() const;
  /// "[a1,a2,a3,a4,a6]"
  std::string to_string() const;

  /// Coefficient-wise equality of the models (not isomorphism; see isomorphic()).
  friend bool operator==(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs) {
    return lhs.a_ == rhs.a_;
  }

 private:
  AInvariants a_;
  Rational b2_, b4_, b6_, b8_, c4_, c6_, disc_, j_;
};

WeierstrassCurve invariants(const Rational& a1, const Rational& a2, const Rational& a3,
                            const Rational& a4, const Rational& a6);

WeierstrassCurve transform(const WeierstrassCurve& e, const IsoData& iso);

struct ModelWithIso {
  WeierstrassCurve curve;
  IsoData iso;  // maps the input model to `curve`
};

/// Global minimal model in reduced form (a1, a3 in {0,1}, a2 in {-1,0,1}).
ModelWithIso minimal_model(const WeierstrassCurve& e);

/// Integral short model Y^2 = X^3 - 27 c4 X - 54 c6 of an integral curve.
ModelWithIso short_model(const WeierstrassCurve& e);

/// Reduced integral model with the given c-invariants. The pair must satisfy
/// Kraus' integrality conditions; throws Error(invalid_argument) otherwise.
WeierstrassCurve curve_from_c_invariants(const Integer& c4, const Integer& c6);

/// y^2 = x^3 - 27 d^2 c4 x - 54 d^3 c6, i.e. y^2 = x^3 + d^2 a x + d^3 b when the
/// input is already y^2 = x^3 + a x + b. Throws Error(not_squarefree).
WeierstrassCurve quadratic_twist(const WeierstrassCurve& e, const Integer& d);

/// Equality of reduced global minimal models.
bool isomorphic(const WeierstrassCurve& lhs, const WeierstrassCurve& rhs);

// Rational points in affine coordinates plus the identity.
struct Point {
  Rational x{0};
  Rational y{0};
  bool at_infinity = true;

  static Point infinity() { return {}; }
  static Point affine(Rational x, Rational y) { return {std::move(x), std::move(y), false}; }

  friend bool operator==(const Point&, const Point&) = default;
};

std::string to_string(const Point& p);

bool on_curve(const WeierstrassCurve& e, const Point& p);
Point negate(const WeierstrassCurve& e, const Point& p);
Point add(const WeierstrassCurve& e, const Point& p, const Point& q);
Point multiply(const WeierstrassCurve& e, const Point& p, long n);
/// Exact order of p if it is at most max_order, else std::nullopt.
std::optional<int> point_order(const WeierstrassCurve& e, const Point& p, int max_order = 12);

/// Moves a point on e to the model transform(e, iso).
Point map_point(const Point& p, const IsoData& iso);
/// Moves a point on transform(e, iso) back to e.
Point unmap_point(const Point& p, const IsoData& iso);

}  // namespace ecq

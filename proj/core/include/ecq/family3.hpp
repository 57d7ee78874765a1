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

#include <optional>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"
#include "ecq/localdata.hpp"

namespace ecq {

/// y^2 + a xy + b y = x^3 with b > 0, D = a^3 - 27b != 0, and for every prime q
/// either q does not divide a or q^3 does not divide b. (0, 0) has order 3.
class FamilyCurve {
 public:
  /// Throws Error(singular_family_member) if D = 0 and Error(invalid_argument)
  /// if (a, b) is not normalized; use normalize() for arbitrary input.
  FamilyCurve(Integer a, Integer b);
  /// Skips the normalization check (b > 0 and D != 0 are still enforced).
  static FamilyCurve unchecked(Integer a, Integer b);

  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }
  const Integer& D() const { return d_; }
  /// b^3 (a^3 - 27b)
  const Integer& delta() const { return delta_; }
  /// a (a^3 - 24b)
  const Integer& c4() const { return c4_; }

  WeierstrassCurve curve() const;
  std::string to_string() const;  // "(a,b)"

  friend bool operator==(const FamilyCurve& x, const FamilyCurve& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  struct NoCheck {};
  FamilyCurve(Integer a, Integer b, NoCheck);

  Integer a_, b_, d_, delta_, c4_;
};

bool is_normalized(const Integer& a, const Integer& b);

/// Normal form of y^2 + c xy + d y = x^3. Throws Error(singular_family_member).
FamilyCurve normalize(const Rational& c, const Rational& d);

struct FamilyModel {
  FamilyCurve family;
  IsoData iso;  // maps the input curve onto family.curve(), sending P to (0,0)
};

/// Throws Error(not_order_three) unless P is a point of exact order 3 on e.
FamilyModel family_model(const WeierstrassCurve& e, const Point& p);
FamilyCurve from_curve(const WeierstrassCurve& e, const Point& p);

struct ClassifyResult {
  std::vector<KodairaType> candidates;     // one entry, or two when undecided
  std::optional<int> tamagawa;             // when pinned down by the closed form
  std::optional<ReductionClass> red;       // when pinned down by the closed form

  bool contains(const KodairaType& k) const;
};

/// Closed-form reduction type at p from the valuations of a, b and D.
/// Throws Error(not_prime), or Error(unreachable_branch) on non-normalized input.
ClassifyResult classify(const FamilyCurve& f, const Integer& p);

/// Model of the 3-isogenous curve E / <(0,0)> with discriminant D^3 b:
/// y^2 + (a+6)xy + (a^2+3a+9)y = x^3 when b = 1, otherwise
/// y^2 + a xy - 9b y = x^3 - (a^3 + 27b) b.
WeierstrassCurve dual(const FamilyCurve& f);

}  // namespace ecq

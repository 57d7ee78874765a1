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

#include <string>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"

namespace ecq {

/// E(Q)_tors as Z/n1 x Z/n2 with n1 | n2 (n1 = 1 when cyclic).
struct TorsionGroup {
  int n1 = 1;
  int n2 = 1;
  std::vector<Point> generators;  // n2-generator first; empty for the trivial group
  std::vector<Point> points;      // every torsion point including the identity

  int order() const { return n1 * n2; }
  int exponent() const { return n2; }
  bool is_cyclic() const { return n1 == 1; }
  /// "Z/1", "Z/6", "Z/2xZ/4", ...
  std::string shape() const;
};

/// gcd of #E(F_p) over the first `primes` good primes p >= 3; a multiple of |E(Q)_tors|.
Integer torsion_bound(const WeierstrassCurve& e, int primes = 12);

/// Exact torsion subgroup; points are in the coordinates of `e`.
TorsionGroup torsion_subgroup(const WeierstrassCurve& e);

/// Whether E(Q) has a point of exact order n. Throws Error(order_out_of_range)
/// unless 2 <= n <= 12.
bool has_point_of_order(const WeierstrassCurve& e, int n);
bool has_point_of_order(const TorsionGroup& t, int n);

/// Whether (n1, n2) is one of Mazur's fifteen groups.
bool is_mazur_group(int n1, int n2);

}  // namespace ecq

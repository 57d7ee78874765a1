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

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"

namespace ecq {

/// Kodaira symbol of the special fibre. `n` is only meaningful for I_n and I_n*.
struct KodairaType {
  enum class Tag { I0, In, II, III, IV, I0Star, InStar, IVStar, IIIStar, IIStar };

  Tag tag = Tag::I0;
  int n = 0;

  /// I_n, collapsing n = 0 to I0.
  static KodairaType I(int n) { return n == 0 ? KodairaType{} : KodairaType{Tag::In, n}; }
  /// I_n^*, collapsing n = 0 to I0*.
  static KodairaType IStar(int n) {
    return n == 0 ? KodairaType{Tag::I0Star, 0} : KodairaType{Tag::InStar, n};
  }
  static KodairaType of(Tag tag) { return KodairaType{tag, 0}; }

  bool is_multiplicative() const { return tag == Tag::In; }
  bool is_additive() const { return tag != Tag::I0 && tag != Tag::In; }
  /// I_n^* for some n >= 0.
  bool is_i_star() const { return tag == Tag::I0Star || tag == Tag::InStar; }

  friend auto operator<=>(const KodairaType&, const KodairaType&) = default;
};

/// Canonical spelling: I0, I5, II, III, IV, I0*, I3*, IV*, III*, II*.
std::string to_string(const KodairaType& k);
/// Inverse of to_string; throws Error(parse_error).
KodairaType parse_kodaira(std::string_view text);

enum class ReductionClass { good, split_multiplicative, nonsplit_multiplicative, additive };

std::string_view to_string(ReductionClass r);

struct LocalData {
  Integer p;
  KodairaType kodaira;
  int tamagawa = 1;
  int conductor_exponent = 0;
  int ord_disc = 0;  // ord_p of the minimal discriminant
  ReductionClass red = ReductionClass::good;
};

/// Tate's algorithm at p. Any rational model is accepted; it is made integral
/// and minimized at p internally. Throws Error(not_prime).
LocalData tate(const WeierstrassCurve& e, const Integer& p);

/// Local data at every prime dividing the minimal discriminant, ascending.
std::vector<LocalData> local_data(const WeierstrassCurve& e);

/// Product of p^{f_p}.
Integer conductor(const WeierstrassCurve& e);
Integer conductor(const std::vector<LocalData>& locals);

/// Product of the Tamagawa numbers.
Integer tamagawa_product(const std::vector<LocalData>& locals);

ReductionClass reduction_class(const WeierstrassCurve& e, const Integer& p);

}  // namespace ecq

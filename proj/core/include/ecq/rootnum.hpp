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
#include <string>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"
#include "ecq/localdata.hpp"

namespace ecq {

enum class RootNumber : int { minus = -1, undetermined = 0, plus = 1 };

std::string to_string(RootNumber w);
RootNumber operator*(RootNumber x, RootNumber y);

/// A place of Q; `prime` empty means the real place.
struct Place {
  std::optional<Integer> prime;

  static Place infinity() { return {}; }
  static Place finite(Integer p) { return {std::move(p)}; }
  bool is_infinite() const { return !prime.has_value(); }
  std::string to_string() const;  // "inf" or the prime
};

/// Kronecker symbol (a | n) for arbitrary integers.
int kronecker(const Integer& a, const Integer& n);

/// Local root number where it is known in closed form: -1 at infinity; +1 for good
/// or nonsplit multiplicative, -1 for split multiplicative reduction; for
/// j not in {0, 1728}: -1 for I_n^* at 3 and (-3 | p) for IV / IV^* at p >= 5.
/// Every other additive place is undetermined.
RootNumber local_root_number(const WeierstrassCurve& e, const Place& place);
RootNumber local_root_number(const LocalData& ld, const Rational& j);

struct RootNumberReport {
  std::vector<std::pair<Place, RootNumber>> local;  // infinity first, then bad primes ascending
  RootNumber global = RootNumber::undetermined;
};

RootNumberReport root_number_report(const WeierstrassCurve& e);
RootNumberReport root_number_report(const std::vector<LocalData>& locals, const Rational& j);

/// Product of the local root numbers; undetermined if any factor is.
RootNumber global_root_number(const WeierstrassCurve& e);

}  // namespace ecq

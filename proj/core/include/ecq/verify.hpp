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

// Property checks over single curves and over a box of 3-torsion family
// curves. Every check returns a Verdict; hypotheses that do not hold give
// not_applicable (with the failed hypothesis in witness.reason), numerics
// that cannot be certified give skipped. A fail verdict on a curve that meets
// the hypotheses is always an implementation bug.
//
// Check ids:
//   family_reduction_classifier  closed-form Kodaira/c_p of y^2+axy+by=x^3 vs Tate
//   isogeny_witness              dual model: discriminant D^3 b, same conductor and a_p
//   split_tamagawa_ratio         c_p(dual)/c_p(E) = 3^{+-1} at split multiplicative p
//   period_ratio                 Omega(E)/Omega(dual) in {1, 3}
//   tamagawa_b_shape             I_n^* at 3 and 9 !| prod c_p  =>  b = 1 or r^m
//   root_number_parity           closed-form w(E) agrees with the analytic sign
//   three_torsion_sha_tamagawa   3-torsion + I_n^* at 3 + L(E,1) != 0  =>  9 | Sha prod c_p
//                                (9 | prod c_p with more than two additive places)
//   twist_torsion                E^d(Q)_tors has no 5/7-torsion, no 3-torsion unless d = +-3
//   twist_reduction              I_0^* at odd p | d; I_8^* or II at 2 for d = +-2
//   twist_sha_divisibility       |E^d(Q)|^2 | Sha prod c_p (odd parts)
//   additive_torsion_types       l-torsion with additive reduction at l = 5, 7 => II/III, II

#include <optional>
#include <vector>

#include "ecq/analytic.hpp"
#include "ecq/curve.hpp"
#include "ecq/dataio.hpp"
#include "ecq/family3.hpp"
#include "ecq/verdict.hpp"

namespace ecq {

/// Where |Sha| and the rank come from: known values (e.g. a curve record) win,
/// anything missing is estimated analytically.
struct ShaSource {
  std::optional<long> sha;
  std::optional<long> rank;

  static ShaSource analytic() { return {}; }
  static ShaSource from_record(const CurveRecord& r) { return {r.sha, r.rank}; }
};

/// Residual above which an analytic Sha is not trusted.
inline constexpr double kShaResidualLimit = 1e-4;

Verdict check_family_classifier(const FamilyCurve& f);
Verdict check_isogeny_witness(const FamilyCurve& f);
Verdict check_split_tamagawa_ratio(const FamilyCurve& f);
Verdict check_period_ratio(const FamilyCurve& f);
Verdict check_tamagawa_b_shape(const FamilyCurve& f);

Verdict check_root_number_parity(const WeierstrassCurve& e);
Verdict check_three_torsion_sha(const WeierstrassCurve& e, const ShaSource& source = {});
Verdict check_additive_torsion_types(const WeierstrassCurve& e);

Verdict check_twist_torsion(const WeierstrassCurve& e, const Integer& d);
Verdict check_twist_reduction(const WeierstrassCurve& e, const Integer& d);

enum class TwistMode {
  squarefree,                // d is the squarefree twist parameter
  fundamental_discriminant,  // d is a fundamental discriminant; twist by its squarefree core
};

/// `source` describes the twist E^d. With `force`, hypothesis failures are
/// recorded in the witness instead of short-circuiting to not_applicable.
Verdict check_twist_divisibility(const WeierstrassCurve& e, const Integer& d,
                                 const ShaSource& source = {},
                                 TwistMode mode = TwistMode::squarefree, bool force = false);

bool is_fundamental_discriminant(const Integer& d);

struct VerifyOptions {
  std::vector<Integer> twists;  // d values for the twist checks
  bool analytic = true;         // root numbers and L-values
  bool twist_sha = false;       // twist divisibility (needs L-values of twists)
};

/// Every check that applies to a single curve.
std::vector<Verdict> verify_curve(const WeierstrassCurve& e, const ShaSource& source,
                                  const VerifyOptions& options, const std::string& name = "");

struct ScanBox {
  long a_min = -60, a_max = 60;
  long b_min = 1, b_max = 60;
};

struct ScanOptions {
  VerifyOptions verify;
  bool periods = true;
  unsigned threads = 1;
  /// Also scan Tate normal forms with a point of order 5 and 7 for parameters
  /// t = n/m with |n| <= height, 1 <= m <= height (0 disables).
  long torsion_family_height = 0;
};

/// All normalized (a, b) in the box, ordered by a then b.
std::vector<FamilyCurve> family_box(const ScanBox& box);

/// Tate normal form y^2 + (1-c)xy - by = x^3 - bx^2 with (0,0) of order l = 5 or 7.
WeierstrassCurve tate_normal_form(int l, const Rational& t);

/// Deterministic: the verdict list does not depend on options.threads.
std::vector<Verdict> scan(const ScanBox& box, const ScanOptions& options);

}  // namespace ecq

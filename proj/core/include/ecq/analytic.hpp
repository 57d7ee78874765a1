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

// Numerics: Frobenius traces, L(E,1) by the exponentially convergent series,
// the real period by the AGM, and the rank-0 BSD quotient. Everything else in
// the library is exact; this is the only module that rounds.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <optional>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"
#include "ecq/localdata.hpp"
#include "ecq/rootnum.hpp"

namespace ecq {

using Real = boost::multiprecision::cpp_bin_float_50;

/// Numerical value with a rigorous truncation bound and an estimate of the
/// floating-point error.
struct Estimate {
  double value = 0;
  double tail = 0;
  double rounding = 0;
  long terms = 0;

  double error() const { return tail + rounding; }
  /// |value| > tail + 10 * rounding.
  bool certified_nonzero() const { return std::abs(value) > tail + 10 * rounding; }
};

struct AgmResult {
  Real value;
  int iterations = 0;
};

AgmResult agm(Real a, Real b);

/// a_p for a prime p: p + 1 - #E(F_p) at good p, +1 / -1 / 0 for split,
/// nonsplit and additive reduction. Throws Error(not_prime).
long ap(const WeierstrassCurve& e, const Integer& p);

/// a_1 .. a_bound of the L-series (index 0 holds 0).
std::vector<long> an_table(const WeierstrassCurve& e, long bound);

struct LOptions {
  long terms = 0;          // 0 picks enough terms for `target`
  double target = 1e-12;   // absolute truncation target when terms = 0
  bool assume_even = false;  // skip the parity check
};

struct ShaEstimate {
  double value = 0;        // L(E,1) |T|^2 / (Omega prod c_p)
  long rounded = 0;
  double residual = 0;     // |value - rounded|
  Estimate l_value;
  double omega = 0;
  Integer tamagawa_product;
  int torsion_order = 1;
};

/// Per-curve cache of the minimal model, local data and a_n table.
class AnalyticCurve {
 public:
  explicit AnalyticCurve(const WeierstrassCurve& e);
  AnalyticCurve(const WeierstrassCurve& e, std::vector<LocalData> locals);

  const WeierstrassCurve& minimal() const { return minimal_; }
  const std::vector<LocalData>& local() const { return locals_; }
  const Integer& conductor() const { return conductor_; }
  /// Root number from the closed-form local table (may be undetermined).
  RootNumber table_root_number() const { return table_w_; }

  /// a_1 .. a_bound; grows the cache as needed.
  const std::vector<long>& coefficients(long bound);
  long ap(long p) const;

  /// Terms needed so that the series at e^{-2 pi n t / sqrt N} has tail below target.
  long terms_for(double t, double target) const;

  /// Sum_{n <= terms} a_n / n exp(-2 pi n t / sqrt N) with its tail bound.
  Estimate partial_series(double t, long terms);

  /// Sign of the functional equation read off numerically from the a_n alone;
  /// undetermined if no test point separates +1 from -1 cleanly.
  RootNumber numerical_root_number();

  /// L(E,1) = 2 Sum a_n/n exp(-2 pi n / sqrt N). Uses the table root number,
  /// falling back to numerical_root_number(). Throws Error(odd_functional_equation)
  /// when w = -1 and Error(undetermined_parity) when neither source decides.
  Estimate l_value(const LOptions& options = {});

  Real real_period() const;

  /// Throws Error(rank_positive_suspected) unless L(E,1) is certified nonzero
  /// (in particular whenever w = -1).
  ShaEstimate sha(std::optional<int> torsion_order = std::nullopt, const LOptions& options = {});

 private:
  WeierstrassCurve minimal_;
  std::vector<LocalData> locals_;
  Integer conductor_;
  double sqrt_n_ = 1;
  RootNumber table_w_ = RootNumber::undetermined;
  std::vector<long> an_{0, 1};
  std::optional<RootNumber> numerical_w_;
};

Estimate l_value_rank0(const WeierstrassCurve& e, const LOptions& options = {});
RootNumber numerical_root_number(const WeierstrassCurve& e);

/// Integral of |omega_min| over E(R): twice the least positive real period when
/// Delta > 0 (two real components), the least positive real period otherwise.
Real real_period(const WeierstrassCurve& e);

ShaEstimate sha_analytic_rank0(const WeierstrassCurve& e);

}  // namespace ecq

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


#include "ecq/analytic.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <numbers>

#include "ecq/error.hpp"
#include "ecq/torsion.hpp"

namespace ecq {

namespace {

using LongDouble = long double;
constexpr LongDouble kPi = std::numbers::pi_v<long double>;

Real to_real(const Integer& n) { return Real(n.get_str()); }
Real to_real(const Rational& q) { return to_real(q.get_num()) / to_real(q.get_den()); }

// p + 1 - #E(F_p) for an integral model with good reduction at p.
long count_trace(const WeierstrassCurve& e, long p) {
  const auto red = [p](const Rational& q) {
    return static_cast<long>(mpz_fdiv_ui(q.get_num_mpz_t(), static_cast<unsigned long>(p)));
  };
  if (p == 2) {
    const long a1 = red(e.a1()), a2 = red(e.a2()), a3 = red(e.a3()), a4 = red(e.a4()),
               a6 = red(e.a6());
    long count = 1;
    for (long x = 0; x < 2; ++x) {
      for (long y = 0; y < 2; ++y) {
        if ((y * y + a1 * x * y + a3 * y + x * x * x + a2 * x * x + a4 * x + a6) % 2 == 0) ++count;
      }
    }
    return 3 - count;
  }
  // Sum of (g(x) | p) for g = 4x^3 + b2 x^2 + 2 b4 x + b6, stepped by finite differences.
  std::vector<std::int8_t> chi(static_cast<std::size_t>(p), -1);
  chi[0] = 0;
  for (long y = 1, sq = 1; y <= p / 2; ++y) {
    chi[static_cast<std::size_t>(sq)] = 1;
    sq += 2 * y + 1;
    sq %= p;
  }
  const long b2 = red(e.b2()), b4 = red(e.b4()), b6 = red(e.b6());
  long g = b6;
  long d1 = (4 + b2 + 2 * b4) % p;
  long d2 = (24 + 2 * b2) % p;
  const long d3 = 24 % p;
  long sum = 0;
  for (long x = 0; x < p; ++x) {
    sum += chi[static_cast<std::size_t>(g)];
    g += d1;
    if (g >= p) g -= p;
    d1 += d2;
    if (d1 >= p) d1 -= p;
    d2 += d3;
    if (d2 >= p) d2 -= p;
  }
  return -sum;
}

long bad_trace(const LocalData& ld) {
  switch (ld.red) {
    case ReductionClass::split_multiplicative: return 1;
    case ReductionClass::nonsplit_multiplicative: return -1;
    default: return 0;
  }
}

// Real roots of 4x^3 + b2 x^2 + 2 b4 x + b6, descending.
std::vector<Real> real_roots(const Real& b2, const Real& b4, const Real& b6) {
  const auto f = [&](const Real& x) { return ((4 * x + b2) * x + 2 * b4) * x + b6; };
  const auto df = [&](const Real& x) { return (12 * x + 2 * b2) * x + 2 * b4; };
  const Real bound = 1 + std::max({abs(b2) / 4, abs(b4) / 2, abs(b6) / 4});
  std::vector<Real> cuts{-bound};
  const Real c4 = b2 * b2 - 24 * b4;
  if (c4 > 0) {
    const Real r = sqrt(c4);
    cuts.push_back((-b2 - r) / 12);
    cuts.push_back((-b2 + r) / 12);
  }
  cuts.push_back(bound);
  std::vector<Real> roots;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Real lo = cuts[i], hi = cuts[i + 1];
    Real flo = f(lo), fhi = f(hi);
    if (flo == 0) {
      roots.push_back(lo);
      continue;
    }
    if ((flo > 0) == (fhi > 0)) continue;
    // Bisection in long double precision, then Newton in full precision.
    for (int it = 0; it < 200; ++it) {
      const Real mid = (lo + hi) / 2;
      if (static_cast<LongDouble>(hi - lo) <=
          std::numeric_limits<LongDouble>::epsilon() * (1 + std::abs(static_cast<LongDouble>(mid)))) {
        break;
      }
      const Real fm = f(mid);
      if ((fm > 0) == (flo > 0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    Real x = (lo + hi) / 2;
    for (int it = 0; it < 8; ++it) {
      const Real d = df(x);
      if (d == 0) break;
      const Real step = f(x) / d;
      x -= step;
      if (abs(step) <= abs(x) * Real("1e-48")) break;
    }
    roots.push_back(x);
  }
  std::sort(roots.begin(), roots.end(), [](const Real& l, const Real& r) { return l > r; });
  return roots;
}

Real period_of_minimal(const WeierstrassCurve& m) {
  const Real b2 = to_real(m.b2()), b4 = to_real(m.b4()), b6 = to_real(m.b6());
  const std::vector<Real> e = real_roots(b2, b4, b6);
  const Real pi = boost::math::constants::pi<Real>();
  if (m.discriminant() > 0) {
    if (e.size() != 3) throw Error(Errc::invalid_argument, "internal: expected three real roots");
    const Real w1 = pi / agm(sqrt(e[0] - e[2]), sqrt(e[0] - e[1])).value;
    return 2 * w1;
  }
  if (e.size() != 1) throw Error(Errc::invalid_argument, "internal: expected one real root");
  const Real z = 3 * e[0] + b2 / 4;
  const Real beta = sqrt(3 * e[0] * e[0] + b2 / 2 * e[0] + b4 / 2);
  return 2 * pi / agm(2 * sqrt(beta), sqrt(2 * beta + z)).value;
}

}  // namespace

AgmResult agm(Real a, Real b) {
  AgmResult out;
  const Real tol("1e-48");
  while (abs(a - b) > tol * abs(a) && out.iterations < 200) {
    const Real m = (a + b) / 2;
    b = sqrt(a * b);
    a = m;
    ++out.iterations;
  }
  out.value = a;
  return out;
}

long ap(const WeierstrassCurve& e, const Integer& p) {
  if (!is_prime(p)) throw Error(Errc::not_prime, p.get_str() + " is not prime");
  const WeierstrassCurve m = minimal_model(e).curve;
  const LocalData ld = tate(m, p);
  if (ld.red != ReductionClass::good) return bad_trace(ld);
  if (!p.fits_slong_p()) throw Error(Errc::invalid_argument, "prime too large for point counting");
  return count_trace(m, p.get_si());
}

std::vector<long> an_table(const WeierstrassCurve& e, long bound) {
  AnalyticCurve c(e);
  const auto& table = c.coefficients(bound);
  return {table.begin(), table.begin() + (bound + 1)};
}

AnalyticCurve::AnalyticCurve(const WeierstrassCurve& e)
    : AnalyticCurve(e, local_data(minimal_model(e).curve)) {}

AnalyticCurve::AnalyticCurve(const WeierstrassCurve& e, std::vector<LocalData> locals)
    : minimal_(minimal_model(e).curve), locals_(std::move(locals)) {
  conductor_ = ecq::conductor(locals_);
  sqrt_n_ = std::sqrt(conductor_.get_d());
  table_w_ = root_number_report(locals_, minimal_.j_invariant()).global;
}

long AnalyticCurve::ap(long p) const {
  for (const LocalData& ld : locals_) {
    if (ld.p == p) return bad_trace(ld);
  }
  return count_trace(minimal_, p);
}

const std::vector<long>& AnalyticCurve::coefficients(long bound) {
  const long have = static_cast<long>(an_.size()) - 1;
  if (bound <= have) return an_;
  std::vector<long> spf(static_cast<std::size_t>(bound) + 1, 0);
  for (long i = 2; i <= bound; ++i) {
    if (spf[i] != 0) continue;
    for (long j = i; j <= bound; j += i) {
      if (spf[j] == 0) spf[j] = i;
    }
  }
  const auto is_bad = [this](long p) {
    return std::any_of(locals_.begin(), locals_.end(), [p](const LocalData& ld) { return ld.p == p; });
  };
  an_.resize(static_cast<std::size_t>(bound) + 1);
  for (long n = have + 1; n <= bound; ++n) {
    const long p = spf[n];
    if (p == n) {
      an_[n] = ap(p);
      continue;
    }
    long q = n, pk = 1;
    while (q % p == 0) {
      q /= p;
      pk *= p;
    }
    if (q != 1) {
      an_[n] = an_[pk] * an_[q];
    } else if (is_bad(p)) {
      an_[n] = an_[p] * an_[n / p];
    } else {
      an_[n] = an_[p] * an_[n / p] - p * an_[n / p / p];
    }
  }
  return an_;
}

long AnalyticCurve::terms_for(double t, double target) const {
  // |a_n| <= d(n) sqrt(n) <= 2n, so the tail past M is at most 2 q^{M+1} / (1 - q).
  const LongDouble c = 2 * kPi * t / sqrt_n_;
  const LongDouble q = std::exp(-c);
  const LongDouble need = std::log(static_cast<LongDouble>(target) * (1 - q) / 2) / -c;
  return std::max<long>(1, static_cast<long>(std::ceil(need)));
}

Estimate AnalyticCurve::partial_series(double t, long terms) {
  const auto& a = coefficients(terms);
  const LongDouble c = 2 * kPi * t / sqrt_n_;
  LongDouble sum = 0, magnitude = 0;
  for (long n = 1; n <= terms; ++n) {
    if (a[n] == 0) continue;
    const LongDouble term = static_cast<LongDouble>(a[n]) / n * std::exp(-c * n);
    sum += term;
    magnitude += std::abs(term);
  }
  const LongDouble q = std::exp(-c);
  Estimate out;
  out.value = static_cast<double>(sum);
  out.tail = static_cast<double>(2 * std::pow(q, static_cast<LongDouble>(terms + 1)) / (1 - q));
  out.rounding = static_cast<double>(4 * (terms + 8) * std::numeric_limits<LongDouble>::epsilon() *
                                     magnitude) +
                 std::numeric_limits<double>::epsilon() * std::abs(out.value);
  out.terms = terms;
  return out;
}

RootNumber AnalyticCurve::numerical_root_number() {
  if (numerical_w_) return *numerical_w_;
  // With g(y) = Sum a_n exp(-2 pi n y / sqrt N) the functional equation reads
  // g(1/y) = w y^2 g(y), hence Int_{1/t}^1 g = w Int_1^t g. Both integrals are
  // differences of A(y) = Sum a_n/n exp(-2 pi n y / sqrt N).
  RootNumber w = RootNumber::undetermined;
  for (const double t : {1.2, 1.3, 1.1, 1.45}) {
    const long terms = terms_for(1 / t, 1e-14);
    const Estimate lo = partial_series(1 / t, terms);
    const Estimate one = partial_series(1, terms);
    const Estimate hi = partial_series(t, terms);
    const double err = lo.error() + 2 * one.error() + hi.error();
    const double num = lo.value - one.value;
    const double den = one.value - hi.value;
    if (std::abs(den) < 1e4 * err || std::abs(num) < 1e4 * err) continue;
    const double ratio = num / den;
    if (std::abs(ratio - 1) < 1e-3) {
      w = RootNumber::plus;
      break;
    }
    if (std::abs(ratio + 1) < 1e-3) {
      w = RootNumber::minus;
      break;
    }
  }
  numerical_w_ = w;
  return w;
}

Estimate AnalyticCurve::l_value(const LOptions& options) {
  if (!options.assume_even) {
    RootNumber w = table_w_;
    if (w == RootNumber::undetermined) w = numerical_root_number();
    if (w == RootNumber::minus) {
      throw Error(Errc::odd_functional_equation, "w(E) = -1 for " + minimal_.to_string());
    }
    if (w == RootNumber::undetermined) {
      throw Error(Errc::undetermined_parity, "cannot decide w(E) for " + minimal_.to_string());
    }
  }
  const long terms = options.terms > 0 ? options.terms : terms_for(1, options.target / 2);
  Estimate a = partial_series(1, terms);
  a.value *= 2;
  a.tail *= 2;
  a.rounding *= 2;
  return a;
}

Real AnalyticCurve::real_period() const { return period_of_minimal(minimal_); }

ShaEstimate AnalyticCurve::sha(std::optional<int> torsion_order, const LOptions& options) {
  if (table_w_ == RootNumber::minus) {
    throw Error(Errc::rank_positive_suspected,
                "w(E) = -1 forces L(E,1) = 0 for " + minimal_.to_string());
  }
  ShaEstimate out;
  try {
    out.l_value = l_value(options);
  } catch (const Error& err) {
    if (err.code() != Errc::odd_functional_equation) throw;
    throw Error(Errc::rank_positive_suspected,
                "numerical root number -1 for " + minimal_.to_string());
  }
  if (!out.l_value.certified_nonzero()) {
    throw Error(Errc::rank_positive_suspected,
                "L(E,1) = " + std::to_string(out.l_value.value) + " is within its error bound");
  }
  out.torsion_order = torsion_order ? *torsion_order : torsion_subgroup(minimal_).order();
  out.tamagawa_product = ecq::tamagawa_product(locals_);
  out.omega = static_cast<double>(real_period());
  out.value = out.l_value.value * out.torsion_order * out.torsion_order /
              (out.omega * out.tamagawa_product.get_d());
  out.rounded = std::lround(out.value);
  out.residual = std::abs(out.value - static_cast<double>(out.rounded));
  return out;
}

Estimate l_value_rank0(const WeierstrassCurve& e, const LOptions& options) {
  return AnalyticCurve(e).l_value(options);
}

RootNumber numerical_root_number(const WeierstrassCurve& e) {
  return AnalyticCurve(e).numerical_root_number();
}

Real real_period(const WeierstrassCurve& e) { return period_of_minimal(minimal_model(e).curve); }

ShaEstimate sha_analytic_rank0(const WeierstrassCurve& e) { return AnalyticCurve(e).sha(); }

}  // namespace ecq

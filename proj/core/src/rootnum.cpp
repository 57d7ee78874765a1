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


#include "ecq/rootnum.hpp"

namespace ecq {

namespace {

// (2 | n) for odd n, indexed by n mod 8.
constexpr int kTwoTable[8] = {0, 1, 0, -1, 0, -1, 0, 1};

int low8(const Integer& n) { return static_cast<int>(mpz_fdiv_ui(n.get_mpz_t(), 8)); }

}  // namespace

std::string to_string(RootNumber w) {
  switch (w) {
    case RootNumber::minus: return "-1";
    case RootNumber::plus: return "+1";
    case RootNumber::undetermined: break;
  }
  return "undetermined";
}

RootNumber operator*(RootNumber x, RootNumber y) {
  return static_cast<RootNumber>(static_cast<int>(x) * static_cast<int>(y));
}

std::string Place::to_string() const { return prime ? prime->get_str() : "inf"; }

int kronecker(const Integer& a_in, const Integer& n_in) {
  Integer a = a_in, n = n_in;
  if (n == 0) return abs(a) == 1 ? 1 : 0;
  if (mpz_even_p(a.get_mpz_t()) && mpz_even_p(n.get_mpz_t())) return 0;
  int k = 1;
  const mp_bitcnt_t v = mpz_scan1(n.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), v);
  if (v % 2 == 1) k = kTwoTable[low8(a)];
  if (n < 0) {
    n = -n;
    if (a < 0) k = -k;
  }
  // n is odd and positive: Jacobi symbol by quadratic reciprocity.
  a = mod(a, n);
  while (a != 0) {
    const mp_bitcnt_t w = mpz_scan1(a.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), w);
    if (w % 2 == 1) k *= kTwoTable[low8(n)];
    if ((low8(a) & low8(n) & 2) != 0) k = -k;
    Integer r = n % a;
    n = a;
    a = r;
  }
  return n == 1 ? k : 0;
}

RootNumber local_root_number(const LocalData& ld, const Rational& j) {
  switch (ld.red) {
    case ReductionClass::good:
    case ReductionClass::nonsplit_multiplicative: return RootNumber::plus;
    case ReductionClass::split_multiplicative: return RootNumber::minus;
    case ReductionClass::additive: break;
  }
  if (j == 0 || j == 1728) return RootNumber::undetermined;
  using Tag = KodairaType::Tag;
  if (ld.p == 3 && ld.kodaira.is_i_star()) return RootNumber::minus;
  if (ld.p >= 5 && (ld.kodaira.tag == Tag::IV || ld.kodaira.tag == Tag::IVStar)) {
    return kronecker(-3, ld.p) == 1 ? RootNumber::plus : RootNumber::minus;
  }
  return RootNumber::undetermined;
}

RootNumber local_root_number(const WeierstrassCurve& e, const Place& place) {
  if (place.is_infinite()) return RootNumber::minus;
  return local_root_number(tate(e, *place.prime), e.j_invariant());
}

RootNumberReport root_number_report(const std::vector<LocalData>& locals, const Rational& j) {
  RootNumberReport out;
  out.local.emplace_back(Place::infinity(), RootNumber::minus);
  RootNumber w = RootNumber::minus;
  for (const LocalData& ld : locals) {
    const RootNumber wp = local_root_number(ld, j);
    out.local.emplace_back(Place::finite(ld.p), wp);
    w = w * wp;
  }
  out.global = w;
  return out;
}

RootNumberReport root_number_report(const WeierstrassCurve& e) {
  return root_number_report(local_data(e), e.j_invariant());
}

RootNumber global_root_number(const WeierstrassCurve& e) { return root_number_report(e).global; }

}  // namespace ecq

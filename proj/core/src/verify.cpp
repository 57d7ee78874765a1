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


#include "ecq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "ecq/error.hpp"
#include "ecq/localdata.hpp"
#include "ecq/rootnum.hpp"
#include "ecq/torsion.hpp"

namespace ecq {

namespace {

using Json = nlohmann::ordered_json;

Json big(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

// Lazily computed facts about one curve, shared by the checks.
class Facts {
 public:
  Facts(WeierstrassCurve e, std::string name, bool analytic = true)
      : e_(std::move(e)), name_(std::move(name)), analytic_enabled_(analytic) {
    if (name_.empty()) name_ = e_.to_string();
  }

  const WeierstrassCurve& curve() const { return e_; }
  const std::string& name() const { return name_; }
  bool analytic_enabled() const { return analytic_enabled_; }

  const std::vector<LocalData>& locals() {
    if (!locals_) locals_ = local_data(e_);
    return *locals_;
  }
  const Integer& conductor() {
    if (!conductor_) conductor_ = ecq::conductor(locals());
    return *conductor_;
  }
  const TorsionGroup& torsion() {
    if (!torsion_) torsion_ = torsion_subgroup(e_);
    return *torsion_;
  }
  AnalyticCurve& analytic() {
    if (!analytic_) analytic_.emplace(e_, locals());
    return *analytic_;
  }
  const LocalData* at(long p) {
    for (const LocalData& ld : locals()) {
      if (ld.p == p) return &ld;
    }
    return nullptr;
  }
  KodairaType kodaira_at(long p) {
    const LocalData* ld = at(p);
    return ld ? ld->kodaira : KodairaType{};
  }

 private:
  WeierstrassCurve e_;
  std::string name_;
  bool analytic_enabled_;
  std::optional<std::vector<LocalData>> locals_;
  std::optional<Integer> conductor_;
  std::optional<TorsionGroup> torsion_;
  std::optional<AnalyticCurve> analytic_;
};

Json tamagawa_json(const std::vector<LocalData>& locals) {
  Json j = Json::object();
  for (const LocalData& ld : locals) j[ld.p.get_str()] = ld.tamagawa;
  return j;
}

Verdict make(std::string theorem, const std::string& curve) {
  Verdict v;
  v.theorem = std::move(theorem);
  v.curve = curve;
  return v;
}

Verdict& with_status(Verdict& v, Status s, const std::string& reason = {}) {
  v.status = s;
  if (!reason.empty()) v.witness["reason"] = reason;
  return v;
}

Integer odd_part(Integer n) {
  if (n == 0) return n;
  const mp_bitcnt_t v = mpz_scan1(n.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), v);
  return abs(n);
}

// Decides "analytic rank 0", i.e. L(E,1) != 0, recording how in the witness.
enum class Decision { yes, no, unknown };

Decision rank_zero(Facts& f, const ShaSource& source, Json& w, std::string& reason) {
  if (source.rank) {
    w["rank"] = *source.rank;
    w["rank_source"] = "record";
    if (*source.rank != 0) {
      reason = "rank " + std::to_string(*source.rank) + " (record)";
      return Decision::no;
    }
    return Decision::yes;
  }
  if (!f.analytic_enabled()) {
    reason = "analytic checks disabled and no recorded rank";
    return Decision::unknown;
  }
  AnalyticCurve& an = f.analytic();
  RootNumber wsign = an.table_root_number();
  std::string wsource = "table";
  if (wsign == RootNumber::undetermined) {
    wsign = an.numerical_root_number();
    wsource = "numerical";
  }
  w["root_number"] = to_string(wsign);
  w["root_number_source"] = wsource;
  w["rank_source"] = "analytic";
  if (wsign == RootNumber::minus) {
    reason = "root number -1, so L(E,1) = 0";
    return Decision::no;
  }
  if (wsign == RootNumber::undetermined) {
    reason = "root number undetermined";
    return Decision::unknown;
  }
  LOptions opts;
  opts.assume_even = true;
  const Estimate l = an.l_value(opts);
  w["L"] = l.value;
  w["L_error"] = l.error();
  w["L_terms"] = l.terms;
  if (!l.certified_nonzero()) {
    reason = "L(E,1) not certified nonzero";
    return Decision::unknown;
  }
  return Decision::yes;
}

struct ShaValue {
  bool ok = false;
  long value = 0;
};

ShaValue sha_value(Facts& f, const ShaSource& source, Json& w, std::string& reason) {
  if (source.sha) {
    w["sha"] = *source.sha;
    w["sha_source"] = "record";
    return {true, *source.sha};
  }
  if (!f.analytic_enabled()) {
    reason = "analytic checks disabled and no recorded Sha";
    return {};
  }
  try {
    const ShaEstimate s = f.analytic().sha(f.torsion().order());
    w["sha"] = s.rounded;
    w["sha_source"] = "analytic";
    w["sha_estimate"] = s.value;
    w["sha_residual"] = s.residual;
    w["omega"] = s.omega;
    if (s.residual >= kShaResidualLimit || s.rounded <= 0) {
      reason = "analytic Sha is not close to a positive integer";
      return {};
    }
    return {true, s.rounded};
  } catch (const Error& err) {
    reason = err.what();
    return {};
  }
}

Verdict three_torsion_sha(Facts& f, const ShaSource& source) {
  Verdict v = make("three_torsion_sha_tamagawa", f.name());
  Json& w = v.witness;
  const TorsionGroup& t = f.torsion();
  w["torsion"] = t.shape();
  if (!has_point_of_order(t, 3)) return with_status(v, Status::not_applicable, "no rational point of order 3");
  const KodairaType k3 = f.kodaira_at(3);
  w["kodaira_3"] = to_string(k3);
  if (!k3.is_i_star()) {
    return with_status(v, Status::not_applicable, "reduction " + to_string(k3) + " modulo 3");
  }
  std::string reason;
  const Decision rz = rank_zero(f, source, w, reason);
  if (rz == Decision::no) return with_status(v, Status::not_applicable, reason);
  if (rz == Decision::unknown) return with_status(v, Status::skipped, reason);

  Json additive = Json::array();
  for (const LocalData& ld : f.locals()) {
    if (ld.red == ReductionClass::additive) additive.push_back(big(ld.p));
  }
  const std::size_t n_add = additive.size();
  const std::string branch = n_add > 2 ? "b" : n_add == 2 ? "c" : "a";
  const Integer prod = tamagawa_product(f.locals());
  w["additive_places"] = additive;
  w["branch"] = branch;
  w["tamagawa"] = tamagawa_json(f.locals());
  w["tamagawa_product"] = big(prod);
  if (branch == "b") {
    w["conditional_on_bsd"] = false;
    return with_status(v, prod % 9 == 0 ? Status::pass : Status::fail);
  }
  const ShaValue sha = sha_value(f, source, w, reason);
  w["conditional_on_bsd"] = !source.sha.has_value();
  if (!sha.ok) return with_status(v, Status::skipped, reason);
  const Integer total = prod * sha.value;
  w["sha_times_tamagawa"] = big(total);
  return with_status(v, total % 9 == 0 ? Status::pass : Status::fail);
}

Verdict root_number_parity(Facts& f) {
  Verdict v = make("root_number_parity", f.name());
  Json& w = v.witness;
  const RootNumberReport rep = root_number_report(f.locals(), f.curve().j_invariant());
  Json local = Json::object();
  for (const auto& [place, sign] : rep.local) local[place.to_string()] = to_string(sign);
  w["local"] = local;
  w["table"] = to_string(rep.global);
  if (rep.global == RootNumber::undetermined) {
    return with_status(v, Status::not_applicable, "a local root number is undetermined");
  }
  if (!f.analytic_enabled()) return with_status(v, Status::skipped, "analytic checks disabled");
  AnalyticCurve& an = f.analytic();
  const RootNumber numeric = an.numerical_root_number();
  w["numerical"] = to_string(numeric);
  w["conductor"] = big(an.conductor());
  if (numeric == RootNumber::undetermined) {
    return with_status(v, Status::skipped, "numerical root number inconclusive");
  }
  bool certified = false;
  if (numeric == RootNumber::plus) {
    LOptions opts;
    opts.assume_even = true;
    const Estimate l = an.l_value(opts);
    w["L"] = l.value;
    w["L_error"] = l.error();
    certified = l.certified_nonzero();
  }
  w["l_certified_nonzero"] = certified;
  return with_status(v, numeric == rep.global ? Status::pass : Status::fail);
}

Verdict additive_torsion_types(Facts& f) {
  Verdict v = make("additive_torsion_types", f.name());
  Json& w = v.witness;
  const TorsionGroup& t = f.torsion();
  w["torsion"] = t.shape();
  bool checked = false, ok = true;
  for (const int l : {5, 7}) {
    if (!has_point_of_order(t, l)) continue;
    const LocalData* ld = f.at(l);
    if (!ld || ld->red != ReductionClass::additive) continue;
    using Tag = KodairaType::Tag;
    const bool allowed = ld->kodaira.tag == Tag::II || (l == 5 && ld->kodaira.tag == Tag::III);
    w[std::to_string(l)] = to_string(ld->kodaira);
    checked = true;
    ok = ok && allowed;
  }
  if (!checked) {
    return with_status(v, Status::not_applicable,
                       "no point of order 5 or 7 with additive reduction at that prime");
  }
  return with_status(v, ok ? Status::pass : Status::fail);
}

std::optional<std::string> twist_hypothesis(Facts& f, const Integer& d) {
  if (d == 0 || !is_squarefree(d)) return "d is not a nonzero squarefree integer";
  if (abs(d) == 1) return "d = " + d.get_str() + " excluded";
  Integer g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), f.conductor().get_mpz_t());
  if (g != 1) return "gcd(d, N) = " + g.get_str();
  return std::nullopt;
}

Verdict twist_torsion(Facts& f, const Integer& d) {
  Verdict v = make("twist_torsion", f.name());
  Json& w = v.witness;
  w["d"] = big(d);
  if (auto why = twist_hypothesis(f, d)) return with_status(v, Status::not_applicable, *why);
  w["conductor"] = big(f.conductor());
  const TorsionGroup t = torsion_subgroup(quadratic_twist(f.curve(), d));
  w["torsion"] = t.shape();
  w["torsion_order"] = t.order();
  const bool pm3 = abs(d) == 3;
  const long e = t.exponent();
  const bool ok = pm3 ? e % 5 != 0 && e % 7 != 0 : (e & (e - 1)) == 0 && 8 % e == 0;
  w["allowed"] = pm3 ? "orders 2^a 3^b" : "orders dividing 8";
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict twist_reduction(Facts& f, const Integer& d) {
  Verdict v = make("twist_reduction", f.name());
  Json& w = v.witness;
  w["d"] = big(d);
  if (d == 0 || !is_squarefree(d)) return with_status(v, Status::not_applicable, "d is not a nonzero squarefree integer");
  if (d == 1) return with_status(v, Status::not_applicable, "trivial twist");
  Integer g;
  mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), f.conductor().get_mpz_t());
  if (g != 1) return with_status(v, Status::not_applicable, "gcd(d, N) = " + g.get_str());
  const WeierstrassCurve twisted = quadratic_twist(f.curve(), d);
  Json primes = Json::array();
  bool checked = false, ok = true;
  for (const Integer& p : prime_divisors(d)) {
    const LocalData ld = tate(twisted, p);
    Json entry;
    entry["p"] = big(p);
    entry["kodaira"] = to_string(ld.kodaira);
    entry["tamagawa"] = ld.tamagawa;
    using Tag = KodairaType::Tag;
    if (p != 2) {
      entry["expected"] = "I0*";
      ok = ok && ld.kodaira.tag == Tag::I0Star;
      checked = true;
    } else if (abs(d) == 2) {
      entry["expected"] = "I8* or II";
      ok = ok && (ld.kodaira == KodairaType::IStar(8) || ld.kodaira.tag == Tag::II);
      checked = true;
    } else {
      entry["expected"] = "not covered";
    }
    primes.push_back(entry);
  }
  w["primes"] = primes;
  if (!checked) return with_status(v, Status::not_applicable, "no covered ramified prime");
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict twist_divisibility(Facts& f, const Integer& d_in, const ShaSource& source, TwistMode mode,
                           bool force, bool analytic) {
  Verdict v = make("twist_sha_divisibility", f.name());
  Json& w = v.witness;
  Integer d = d_in;
  std::optional<std::string> why;
  if (mode == TwistMode::fundamental_discriminant) {
    w["discriminant"] = big(d_in);
    if (!is_fundamental_discriminant(d_in)) {
      why = "not a fundamental discriminant";
    } else {
      d = squarefree_part(d_in);
      Integer g;
      mpz_gcd(g.get_mpz_t(), d_in.get_mpz_t(), f.conductor().get_mpz_t());
      if (g != 1) why = "gcd(D, N) = " + g.get_str();
    }
  } else {
    why = twist_hypothesis(f, d);
  }
  w["d"] = big(d);
  if (d == 0 || !is_squarefree(d)) return with_status(v, Status::not_applicable, *why);
  if (why) {
    if (!force) return with_status(v, Status::not_applicable, *why);
    w["forced"] = true;
    w["hypothesis_failed"] = *why;
  }
  const Integer& n = f.conductor();
  Facts tw(quadratic_twist(f.curve(), d), "", analytic);
  w["twist"] = tw.curve().to_string();
  std::string reason;
  const Decision rz = rank_zero(tw, source, w, reason);
  if (rz == Decision::no) return with_status(v, force ? Status::skipped : Status::not_applicable, reason);
  if (rz == Decision::unknown) return with_status(v, Status::skipped, reason);

  const long t = tw.torsion().order();
  const bool include_two = mode == TwistMode::squarefree && d == 3;
  Integer prod = 1;
  Json tam = Json::object();
  for (const LocalData& ld : tw.locals()) {
    const bool in_set = n % ld.p == 0 || (include_two && ld.p == 2);
    if (!in_set) continue;
    prod *= ld.tamagawa;
    tam[ld.p.get_str()] = ld.tamagawa;
  }
  w["torsion_order"] = t;
  w["tamagawa"] = tam;
  w["tamagawa_product"] = big(prod);
  w["primes"] = include_two ? "p | 2N" : "p | N";
  const ShaValue sha = sha_value(tw, source, w, reason);
  if (!sha.ok) return with_status(v, Status::skipped, reason);
  w["conditional_on_bsd"] = !source.sha.has_value();
  const Integer lhs = odd_part(Integer(t) * t);
  const Integer rhs = odd_part(prod * sha.value);
  w["odd_torsion_squared"] = big(lhs);
  w["odd_sha_times_tamagawa"] = big(rhs);
  return with_status(v, rhs % lhs == 0 ? Status::pass : Status::fail);
}

// Checks that only make sense for y^2 + axy + by = x^3.
void family_checks(const FamilyCurve& fam, const std::string& name, bool periods,
                   std::vector<Verdict>& out);

Verdict classifier(const FamilyCurve& fam, const std::string& name) {
  Verdict v = make("family_reduction_classifier", name);
  Json& w = v.witness;
  w["family"] = {big(fam.a()), big(fam.b())};
  const WeierstrassCurve e = fam.curve();
  std::vector<Integer> primes = prime_divisors(fam.b());
  for (const Integer& p : prime_divisors(fam.D())) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  Json rows = Json::array();
  bool ok = true;
  for (const Integer& p : primes) {
    const ClassifyResult c = classify(fam, p);
    const LocalData ld = tate(e, p);
    const bool match = c.contains(ld.kodaira) && (!c.tamagawa || *c.tamagawa == ld.tamagawa) &&
                       (!c.red || *c.red == ld.red);
    Json row;
    row["p"] = big(p);
    Json cands = Json::array();
    for (const KodairaType& k : c.candidates) cands.push_back(to_string(k));
    row["candidates"] = cands;
    row["tate"] = to_string(ld.kodaira);
    if (c.tamagawa) row["c_p_pinned"] = *c.tamagawa;
    row["c_p_tate"] = ld.tamagawa;
    row["match"] = match;
    rows.push_back(row);
    ok = ok && match;
  }
  w["primes"] = rows;
  return with_status(v, ok ? Status::pass : Status::fail);
}

}  // namespace

bool is_fundamental_discriminant(const Integer& d) {
  if (d == 0 || d == 1) return false;
  const Integer r = mod(d, 4);
  if (r == 1) return is_squarefree(d);
  if (r != 0) return false;
  const Integer m = d / 4;
  const Integer m4 = mod(m, 4);
  return (m4 == 2 || m4 == 3) && is_squarefree(m);
}

Verdict check_family_classifier(const FamilyCurve& f) { return classifier(f, f.curve().to_string()); }

Verdict check_isogeny_witness(const FamilyCurve& f) {
  const WeierstrassCurve e = f.curve();
  Verdict v = make("isogeny_witness", e.to_string());
  Json& w = v.witness;
  const WeierstrassCurve hat = dual(f);
  w["dual"] = hat.to_string();
  const Rational expected(f.D() * f.D() * f.D() * f.b());
  const bool disc_ok = hat.discriminant() == expected;
  w["dual_discriminant"] = hat.discriminant().get_str();
  w["expected_discriminant"] = expected.get_str();
  AnalyticCurve ae(e), ah(hat);
  w["conductor"] = big(ae.conductor());
  w["dual_conductor"] = big(ah.conductor());
  const long bound = 60;
  const auto& x = ae.coefficients(bound);
  const auto& y = ah.coefficients(bound);
  const bool ap_ok = std::equal(x.begin(), x.begin() + bound + 1, y.begin());
  w["a_n_agree_up_to"] = bound;
  w["a_n_agree"] = ap_ok;
  const bool ok = disc_ok && ap_ok && ae.conductor() == ah.conductor();
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict check_split_tamagawa_ratio(const FamilyCurve& f) {
  const WeierstrassCurve e = f.curve();
  Verdict v = make("split_tamagawa_ratio", e.to_string());
  const std::vector<LocalData> le = local_data(e);
  const std::vector<LocalData> lh = local_data(dual(f));
  Json rows = Json::array();
  bool ok = true;
  for (const LocalData& ld : le) {
    if (ld.red != ReductionClass::split_multiplicative) continue;
    const auto it = std::find_if(lh.begin(), lh.end(), [&](const LocalData& x) { return x.p == ld.p; });
    const bool divides_b = f.b() % ld.p == 0;
    const int c_hat = it == lh.end() ? 1 : it->tamagawa;
    const bool split_hat = it != lh.end() && it->red == ReductionClass::split_multiplicative;
    const bool rel = divides_b ? 3 * c_hat == ld.tamagawa : c_hat == 3 * ld.tamagawa;
    Json row;
    row["p"] = big(ld.p);
    row["c_p"] = ld.tamagawa;
    row["c_p_dual"] = c_hat;
    row["expected_ord3_ratio"] = divides_b ? -1 : 1;
    rows.push_back(row);
    ok = ok && rel && split_hat;
  }
  v.witness["primes"] = rows;
  if (rows.empty()) return with_status(v, Status::not_applicable, "no split multiplicative prime");
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict check_period_ratio(const FamilyCurve& f) {
  const WeierstrassCurve e = f.curve();
  Verdict v = make("period_ratio", e.to_string());
  const Real omega = real_period(e);
  const Real omega_hat = real_period(dual(f));
  const double ratio = static_cast<double>(omega / omega_hat);
  v.witness["omega"] = static_cast<double>(omega);
  v.witness["omega_dual"] = static_cast<double>(omega_hat);
  v.witness["ratio"] = ratio;
  const bool ok = std::abs(ratio - 1) <= 1e-9 || std::abs(ratio - 3) <= 3e-9;
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict check_tamagawa_b_shape(const FamilyCurve& f) {
  const WeierstrassCurve e = f.curve();
  Verdict v = make("tamagawa_b_shape", e.to_string());
  const std::vector<LocalData> locals = local_data(e);
  KodairaType k3;
  for (const LocalData& ld : locals) {
    if (ld.p == 3) k3 = ld.kodaira;
  }
  const Integer prod = tamagawa_product(locals);
  v.witness["kodaira_3"] = to_string(k3);
  v.witness["tamagawa_product"] = big(prod);
  v.witness["b"] = big(f.b());
  if (!k3.is_i_star()) return with_status(v, Status::not_applicable, "reduction " + to_string(k3) + " modulo 3");
  if (prod % 9 == 0) return with_status(v, Status::not_applicable, "9 divides the Tamagawa product");
  const std::vector<PrimePower> fb = factor(f.b());
  const bool ok = f.b() == 1 || (fb.size() == 1 && fb[0].prime != 3);
  return with_status(v, ok ? Status::pass : Status::fail);
}

Verdict check_root_number_parity(const WeierstrassCurve& e) {
  Facts f(e, "");
  return root_number_parity(f);
}

Verdict check_three_torsion_sha(const WeierstrassCurve& e, const ShaSource& source) {
  Facts f(e, "");
  return three_torsion_sha(f, source);
}

Verdict check_additive_torsion_types(const WeierstrassCurve& e) {
  Facts f(e, "");
  return additive_torsion_types(f);
}

Verdict check_twist_torsion(const WeierstrassCurve& e, const Integer& d) {
  Facts f(e, "");
  return twist_torsion(f, d);
}

Verdict check_twist_reduction(const WeierstrassCurve& e, const Integer& d) {
  Facts f(e, "");
  return twist_reduction(f, d);
}

Verdict check_twist_divisibility(const WeierstrassCurve& e, const Integer& d, const ShaSource& source,
                                 TwistMode mode, bool force) {
  Facts f(e, "");
  return twist_divisibility(f, d, source, mode, force, true);
}

namespace {

void family_checks(const FamilyCurve& fam, const std::string& name, bool periods,
                   std::vector<Verdict>& out) {
  const auto rename = [&name](Verdict v) {
    v.curve = name;
    return v;
  };
  out.push_back(rename(classifier(fam, name)));
  out.push_back(rename(check_isogeny_witness(fam)));
  out.push_back(rename(check_split_tamagawa_ratio(fam)));
  if (periods) out.push_back(rename(check_period_ratio(fam)));
  out.push_back(rename(check_tamagawa_b_shape(fam)));
}

void curve_checks(Facts& f, const ShaSource& source, const VerifyOptions& options,
                  std::vector<Verdict>& out) {
  out.push_back(root_number_parity(f));
  out.push_back(three_torsion_sha(f, source));
  out.push_back(additive_torsion_types(f));
  for (const Integer& d : options.twists) {
    out.push_back(twist_torsion(f, d));
    out.push_back(twist_reduction(f, d));
    if (options.twist_sha) {
      out.push_back(twist_divisibility(f, d, ShaSource::analytic(), TwistMode::squarefree, false,
                                       options.analytic));
    }
  }
}

std::vector<Verdict> scan_family(const FamilyCurve& fam, const ScanOptions& options) {
  std::vector<Verdict> out;
  const std::string name = fam.curve().to_string();
  family_checks(fam, name, options.periods, out);
  Facts f(fam.curve(), name, options.verify.analytic);
  curve_checks(f, ShaSource::analytic(), options.verify, out);
  return out;
}

std::vector<Verdict> scan_torsion_family(int l, const Rational& t) {
  std::vector<Verdict> out;
  std::optional<WeierstrassCurve> e;
  try {
    e = tate_normal_form(l, t);
  } catch (const Error&) {
    return out;  // singular parameter
  }
  Facts f(minimal_model(*e).curve, "", false);
  Verdict v = additive_torsion_types(f);
  v.witness["family"] = "order " + std::to_string(l) + ", t = " + t.get_str();
  out.push_back(std::move(v));
  return out;
}

}  // namespace

std::vector<Verdict> verify_curve(const WeierstrassCurve& e, const ShaSource& source,
                                  const VerifyOptions& options, const std::string& name) {
  std::vector<Verdict> out;
  Facts f(e, name, options.analytic);
  if (has_point_of_order(f.torsion(), 3)) {
    const TorsionGroup& t = f.torsion();
    const auto it = std::find_if(t.points.begin(), t.points.end(),
                                 [&](const Point& p) { return point_order(e, p, 3) == 3; });
    if (it != t.points.end()) family_checks(from_curve(e, *it), f.name(), true, out);
  }
  curve_checks(f, source, options, out);
  return out;
}

std::vector<FamilyCurve> family_box(const ScanBox& box) {
  std::vector<FamilyCurve> out;
  for (long a = box.a_min; a <= box.a_max; ++a) {
    for (long b = std::max(1L, box.b_min); b <= box.b_max; ++b) {
      if (is_normalized(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

WeierstrassCurve tate_normal_form(int l, const Rational& t) {
  Rational b, c;
  if (l == 5) {
    b = t;
    c = t;
  } else if (l == 7) {
    b = t * t * t - t * t;
    c = t * t - t;
  } else {
    throw Error(Errc::invalid_argument, "tate_normal_form supports l = 5 or 7");
  }
  return WeierstrassCurve({1 - c, -b, -b, 0, 0});
}

std::vector<Verdict> scan(const ScanBox& box, const ScanOptions& options) {
  struct Item {
    std::optional<FamilyCurve> family;
    int l = 0;
    Rational t;
  };
  std::vector<Item> items;
  for (FamilyCurve& f : family_box(box)) items.push_back({std::move(f), 0, 0});
  const long h = options.torsion_family_height;
  for (const int l : {5, 7}) {
    for (long m = 1; m <= h; ++m) {
      for (long n = -h; n <= h; ++n) {
        Integer g;
        mpz_gcd_ui(g.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(m));
        if (n == 0 || g != 1) continue;
        items.push_back({std::nullopt, l, Rational(n, m)});
      }
    }
  }

  std::vector<std::vector<Verdict>> results(items.size());
  const auto run = [&](std::size_t i) {
    const Item& it = items[i];
    results[i] = it.family ? scan_family(*it.family, options) : scan_torsion_family(it.l, it.t);
  };
  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) run(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < items.size(); i = next++) run(i);
      });
    }
  }
  std::vector<Verdict> out;
  for (auto& r : results) {
    for (Verdict& v : r) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace ecq

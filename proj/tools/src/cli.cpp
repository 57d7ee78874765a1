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


#include "ecq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ecq/analytic.hpp"
#include "ecq/curve.hpp"
#include "ecq/dataio.hpp"
#include "ecq/error.hpp"
#include "ecq/family3.hpp"
#include "ecq/localdata.hpp"
#include "ecq/rootnum.hpp"
#include "ecq/torsion.hpp"
#include "ecq/verify.hpp"

namespace ecq::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json big(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

// Exactly one of: -a (five coefficients), --family a b, --records FILE --label L.
struct CurveSpec {
  std::vector<std::string> a;
  std::vector<std::string> family;
  std::string records;
  std::string label;

  void add_to(CLI::App& app, bool allow_many_records = false) {
    app.add_option("-a,--a", a, "Weierstrass coefficients a1 a2 a3 a4 a6")->expected(5);
    app.add_option("--family", family, "family curve y^2 + a xy + b y = x^3")->expected(2);
    app.add_option("--records", records, "JSON-lines curve records");
    app.add_option("--label", label, "record label to select from --records");
    many_ = allow_many_records;
  }

  int modes() const { return !a.empty() + !family.empty() + !records.empty(); }

  void validate() const {
    if (modes() != 1) throw UsageError("give exactly one of -a, --family, --records");
    if (!label.empty() && records.empty()) throw UsageError("--label needs --records");
    if (!records.empty() && label.empty() && !many_) throw UsageError("--records needs --label");
  }

  std::optional<FamilyCurve> family_curve() const {
    if (family.empty()) return std::nullopt;
    return FamilyCurve(parse_integer(family[0]), parse_integer(family[1]));
  }

  std::vector<CurveRecord> load(std::ostream& err) const {
    std::ifstream in(records);
    if (!in) throw UsageError("cannot open " + records);
    ParseResult parsed = parse_records(in);
    for (const ParseDiagnostic& d : parsed.diagnostics) {
      err << records << ":" << d.line << ": " << d.message << "\n";
    }
    if (label.empty()) return parsed.records;
    const CurveRecord* r = find_label(parsed.records, label);
    if (!r) throw UsageError("label " + label + " not found in " + records);
    return {*r};
  }

  // The single selected curve with its record, if any.
  std::pair<WeierstrassCurve, std::optional<CurveRecord>> curve(std::ostream& err) const {
    if (!a.empty()) {
      WeierstrassCurve::AInvariants c;
      for (int i = 0; i < 5; ++i) c[i] = parse_integer(a[i]);
      return {WeierstrassCurve(c), std::nullopt};
    }
    if (auto f = family_curve()) return {f->curve(), std::nullopt};
    CurveRecord r = load(err).front();
    return {r.curve(), r};
  }

 private:
  bool many_ = false;
};

Json local_json(const LocalData& ld) {
  Json j;
  j["p"] = big(ld.p);
  j["kodaira"] = to_string(ld.kodaira);
  j["reduction"] = std::string(to_string(ld.red));
  j["tamagawa"] = ld.tamagawa;
  j["conductor_exponent"] = ld.conductor_exponent;
  j["ord_disc"] = ld.ord_disc;
  return j;
}

Json locals_json(const std::vector<LocalData>& locals) {
  Json j = Json::array();
  for (const LocalData& ld : locals) j.push_back(local_json(ld));
  return j;
}

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

// Human-readable rendering: "key: value" lines, nested blocks indented.
void render(const Json& j, std::ostream& out, int indent = 0) {
  const std::string pad(indent, ' ');
  for (const auto& [key, value] : j.items()) {
    if (scalar(value)) {
      out << pad << key << ": " << scalar_text(value) << "\n";
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), scalar)) {
      out << pad << key << ":";
      const char* sep = " ";
      for (const Json& x : value) {
        out << sep << scalar_text(x);
        sep = ", ";
      }
      out << "\n";
    } else if (value.is_array()) {
      out << pad << key << ":\n";
      for (const Json& x : value) {
        if (scalar(x)) {
          out << pad << "  - " << scalar_text(x) << "\n";
        } else {
          std::ostringstream block;
          render(x, block, indent + 4);
          std::string text = block.str();
          text.replace(indent, 4, "  - ");
          out << text;
        }
      }
    } else {
      out << pad << key << ":\n";
      render(value, out, indent + 2);
    }
  }
}

void emit(const Json& j, bool json, std::ostream& out) {
  if (json) {
    out << j.dump() << "\n";
  } else {
    render(j, out);
  }
}

Json describe(const WeierstrassCurve& e) {
  Json j;
  j["curve"] = e.to_string();
  j["b_invariants"] = {e.b2().get_str(), e.b4().get_str(), e.b6().get_str(), e.b8().get_str()};
  j["c4"] = e.c4().get_str();
  j["c6"] = e.c6().get_str();
  j["discriminant"] = e.discriminant().get_str();
  j["j"] = e.j_invariant().get_str();
  const ModelWithIso m = minimal_model(e);
  j["minimal_model"] = m.curve.to_string();
  j["minimal_discriminant"] = m.curve.discriminant().get_str();
  const std::vector<LocalData> locals = local_data(e);
  j["conductor"] = big(conductor(locals));
  j["tamagawa_product"] = big(tamagawa_product(locals));
  j["local"] = locals_json(locals);
  return j;
}

Json torsion_json(const WeierstrassCurve& e) {
  const TorsionGroup t = torsion_subgroup(e);
  Json j;
  j["curve"] = e.to_string();
  j["structure"] = t.shape();
  j["order"] = t.order();
  Json gens = Json::array();
  for (const Point& p : t.generators) gens.push_back(to_string(p));
  j["generators"] = gens;
  Json pts = Json::array();
  for (const Point& p : t.points) {
    Json row;
    row["point"] = to_string(p);
    row["order"] = point_order(e, p).value_or(0);
    pts.push_back(row);
  }
  j["points"] = pts;
  return j;
}

Json rootnum_json(const WeierstrassCurve& e) {
  const std::vector<LocalData> locals = local_data(e);
  const RootNumberReport rep = root_number_report(locals, e.j_invariant());
  Json j;
  j["curve"] = e.to_string();
  Json local = Json::object();
  for (const auto& [place, w] : rep.local) local[place.to_string()] = to_string(w);
  j["local"] = local;
  j["global"] = to_string(rep.global);
  return j;
}

Json analytic_json(const WeierstrassCurve& e, const LOptions& opts) {
  AnalyticCurve an(e);
  Json j;
  j["curve"] = e.to_string();
  j["minimal_model"] = an.minimal().to_string();
  j["conductor"] = big(an.conductor());
  j["root_number_table"] = to_string(an.table_root_number());
  j["root_number_numerical"] = to_string(an.numerical_root_number());
  const double omega = static_cast<double>(an.real_period());
  j["omega"] = omega;
  try {
    const Estimate l = an.l_value(opts);
    j["L"] = l.value;
    j["L_error"] = l.error();
    j["terms"] = l.terms;
    j["certified_nonzero"] = l.certified_nonzero();
    j["L_over_omega"] = l.value / omega;
  } catch (const Error& err) {
    j["L"] = err.what();
  }
  try {
    const ShaEstimate s = an.sha(std::nullopt, opts);
    j["tamagawa_product"] = big(s.tamagawa_product);
    j["torsion_order"] = s.torsion_order;
    j["sha_estimate"] = s.value;
    j["sha"] = s.rounded;
    j["sha_residual"] = s.residual;
  } catch (const Error& err) {
    j["sha"] = err.code() == Errc::rank_positive_suspected ? "rank_positive_suspected" : err.what();
    j["reason"] = err.what();
  }
  return j;
}

struct Output {
  std::string path;
  std::ofstream file;
  std::ostream* stream = nullptr;

  std::ostream& open(std::ostream& fallback) {
    if (path.empty()) return *(stream = &fallback);
    file.open(path);
    if (!file) throw UsageError("cannot write " + path);
    return *(stream = &file);
  }
};

// Human summary of a verdict list: per-check counts, then every failure.
void summarize(const std::vector<Verdict>& verdicts, std::ostream& out) {
  std::map<std::string, std::map<std::string, long>> counts;
  for (const Verdict& v : verdicts) counts[v.theorem][std::string(to_string(v.status))]++;
  for (const auto& [check, by_status] : counts) {
    out << check << ":";
    for (const auto& [status, n] : by_status) out << " " << status << "=" << n;
    out << "\n";
  }
  for (const Verdict& v : verdicts) {
    if (v.status == Status::fail) out << "FAIL " << to_json_line(v) << "\n";
  }
}

void print_verdicts(const std::vector<Verdict>& verdicts, bool json, bool all, std::ostream& out) {
  if (json) {
    write_report(verdicts, out);
    return;
  }
  if (!all) {
    summarize(verdicts, out);
    return;
  }
  for (const Verdict& v : verdicts) {
    out << v.theorem << " " << v.curve << ": " << to_string(v.status);
    if (v.witness.contains("reason")) out << " (" << v.witness["reason"].get<std::string>() << ")";
    out << "\n";
  }
}

bool any_fail(const std::vector<Verdict>& verdicts) {
  return std::any_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.status == Status::fail; });
}

std::vector<Integer> parse_all(const std::vector<std::string>& xs) {
  std::vector<Integer> out;
  for (const std::string& x : xs) out.push_back(parse_integer(x));
  return out;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact local and analytic invariants of elliptic curves over Q", "ecq"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  Output output;
  app.add_flag("--json", json, "machine-readable JSON output");
  app.add_option("--out", output.path, "write output to FILE instead of stdout");

  CurveSpec spec;
  std::vector<std::string> d_values;
  std::string prime;
  long terms = 0;
  int prec = 12;
  unsigned threads = 1;
  long amin = 0, amax = 60, bmin = 1, bmax = 60;
  bool amin_set = false;
  long torsion_height = 0;
  bool no_periods = false, no_analytic = false, twist_sha = false, force = false;
  bool fundamental = false, verbose = false;

  auto* describe_cmd = app.add_subcommand("describe", "invariants, minimal model and local data");
  auto* twist_cmd = app.add_subcommand("twist", "quadratic twist by d");
  auto* classify_cmd = app.add_subcommand("classify", "closed-form reduction type of a family curve");
  auto* dual_cmd = app.add_subcommand("dual", "3-isogenous dual of a family curve");
  auto* torsion_cmd = app.add_subcommand("torsion", "rational torsion subgroup");
  auto* rootnum_cmd = app.add_subcommand("rootnum", "local and global root numbers");
  auto* analytic_cmd = app.add_subcommand("analytic", "L(E,1), real period and analytic Sha");
  auto* verify_cmd = app.add_subcommand("verify", "run every applicable check on one curve or a record file");
  auto* scan_cmd = app.add_subcommand("scan", "run the checks over a box of family curves");

  for (CLI::App* c : {describe_cmd, twist_cmd, torsion_cmd, rootnum_cmd, analytic_cmd, dual_cmd, classify_cmd}) {
    spec.add_to(*c);
  }
  spec.add_to(*verify_cmd, true);
  twist_cmd->add_option("--d", d_values, "squarefree twisting parameter")->required()->expected(1);
  classify_cmd->add_option("-p", prime, "prime (default: every prime dividing the discriminant)");
  for (CLI::App* c : {analytic_cmd, verify_cmd, scan_cmd}) {
    c->add_option("--terms", terms, "number of series terms (default: chosen from --prec)");
    c->add_option("--prec", prec, "target absolute error 10^-PREC for L(E,1)")->check(CLI::Range(1, 40));
  }
  verify_cmd->add_option("--d", d_values, "twisting parameters");
  verify_cmd->add_flag("--twist-sha", twist_sha, "also check the twisted Sha divisibility");
  verify_cmd->add_flag("--fundamental", fundamental, "treat --d values as fundamental discriminants");
  verify_cmd->add_flag("--force", force, "evaluate twisted divisibility even when hypotheses fail");
  verify_cmd->add_flag("-v,--verbose", verbose, "list every verdict in human output");
  scan_cmd->add_option("--d", d_values, "twisting parameters (default: +-2 +-5 +-6 +-7 +-10)");
  scan_cmd->add_option("--amin", amin, "smallest a (default: -amax)")->each([&](const std::string&) { amin_set = true; });
  scan_cmd->add_option("--amax", amax, "largest a");
  scan_cmd->add_option("--bmin", bmin, "smallest b");
  scan_cmd->add_option("--bmax", bmax, "largest b");
  scan_cmd->add_option("--threads", threads, "worker threads")->check(CLI::Range(1u, 256u));
  scan_cmd->add_option("--torsion-height", torsion_height, "also scan 5/7-torsion normal forms up to this height");
  scan_cmd->add_flag("--no-periods", no_periods, "skip the period-ratio check");
  scan_cmd->add_flag("--no-analytic", no_analytic, "skip checks that need L-series");
  scan_cmd->add_flag("-v,--verbose", verbose, "list every verdict in human output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "ecq: " << e.what() << "\n";
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kUsage;
  }

  LOptions lopts;
  lopts.terms = terms;
  lopts.target = std::pow(10.0, -prec);

  try {
    CLI::App* cmd = app.get_subcommands().front();
    if (cmd != scan_cmd) spec.validate();
    std::ostream& o = output.open(out);

    if (cmd == describe_cmd) {
      emit(describe(spec.curve(err).first), json, o);
      return kOk;
    }
    if (cmd == twist_cmd) {
      const WeierstrassCurve e = spec.curve(err).first;
      const Integer d = parse_integer(d_values.front());
      const WeierstrassCurve t = quadratic_twist(e, d);
      Json j;
      j["curve"] = e.to_string();
      j["d"] = big(d);
      j["twist"] = t.to_string();
      j["minimal_model"] = minimal_model(t).curve.to_string();
      const std::vector<LocalData> locals = local_data(t);
      j["conductor"] = big(conductor(locals));
      j["local"] = locals_json(locals);
      emit(j, json, o);
      return kOk;
    }
    if (cmd == classify_cmd) {
      const std::optional<FamilyCurve> f = spec.family_curve();
      if (!f) throw UsageError("classify needs --family a b");
      std::vector<Integer> primes;
      if (!prime.empty()) {
        primes.push_back(parse_integer(prime));
      } else {
        primes = prime_divisors(f->delta());
      }
      Json rows = Json::array();
      for (const Integer& p : primes) {
        const ClassifyResult c = classify(*f, p);
        Json row;
        row["p"] = big(p);
        Json cands = Json::array();
        for (const KodairaType& k : c.candidates) cands.push_back(to_string(k));
        row["candidates"] = cands;
        if (c.tamagawa) row["tamagawa"] = *c.tamagawa;
        if (c.red) row["reduction"] = std::string(to_string(*c.red));
        rows.push_back(row);
      }
      if (rows.size() == 1) {
        emit(rows.front(), json, o);
      } else {
        Json j;
        j["family"] = f->to_string();
        j["primes"] = rows;
        emit(j, json, o);
      }
      return kOk;
    }
    if (cmd == dual_cmd) {
      std::optional<FamilyCurve> f = spec.family_curve();
      const WeierstrassCurve e = spec.curve(err).first;
      if (!f) {
        const TorsionGroup t = torsion_subgroup(e);
        for (const Point& p : t.points) {
          if (point_order(e, p) == 3) {
            f = from_curve(e, p);
            break;
          }
        }
        if (!f) throw Error(Errc::not_order_three, "curve has no rational point of order 3");
      }
      const WeierstrassCurve hat = dual(*f);
      Json j;
      j["curve"] = e.to_string();
      j["family"] = f->to_string();
      j["dual"] = hat.to_string();
      j["dual_minimal_model"] = minimal_model(hat).curve.to_string();
      j["discriminant"] = f->delta().get_str();
      j["dual_discriminant"] = hat.discriminant().get_str();
      j["conductor"] = big(conductor(f->curve()));
      j["dual_conductor"] = big(conductor(hat));
      emit(j, json, o);
      return kOk;
    }
    if (cmd == torsion_cmd) {
      emit(torsion_json(spec.curve(err).first), json, o);
      return kOk;
    }
    if (cmd == rootnum_cmd) {
      emit(rootnum_json(spec.curve(err).first), json, o);
      return kOk;
    }
    if (cmd == analytic_cmd) {
      emit(analytic_json(spec.curve(err).first, lopts), json, o);
      return kOk;
    }
    if (cmd == verify_cmd) {
      VerifyOptions vo;
      vo.twists = parse_all(d_values);
      std::vector<std::pair<WeierstrassCurve, std::optional<CurveRecord>>> curves;
      if (!spec.records.empty()) {
        for (CurveRecord& r : spec.load(err)) curves.emplace_back(r.curve(), r);
      } else {
        curves.push_back(spec.curve(err));
      }
      std::vector<Verdict> verdicts;
      for (const auto& [e, record] : curves) {
        const ShaSource source = record ? ShaSource::from_record(*record) : ShaSource::analytic();
        const std::string name = record ? record->name() : e.to_string();
        for (Verdict& v : verify_curve(e, source, vo, name)) verdicts.push_back(std::move(v));
        if (twist_sha) {
          const TwistMode mode = fundamental ? TwistMode::fundamental_discriminant : TwistMode::squarefree;
          for (const Integer& d : vo.twists) {
            Verdict v = check_twist_divisibility(e, d, ShaSource::analytic(), mode, force);
            v.curve = name;
            verdicts.push_back(std::move(v));
          }
        }
      }
      print_verdicts(verdicts, json, verbose || curves.size() == 1, o);
      return any_fail(verdicts) ? kFailed : kOk;
    }
    if (cmd == scan_cmd) {
      ScanBox box;
      box.a_min = amin_set ? amin : -amax;
      box.a_max = amax;
      box.b_min = bmin;
      box.b_max = bmax;
      ScanOptions so;
      so.threads = threads;
      so.periods = !no_periods;
      so.verify.analytic = !no_analytic;
      so.torsion_family_height = torsion_height;
      so.verify.twists = d_values.empty() ? std::vector<Integer>{-10, -7, -6, -5, -2, 2, 5, 6, 7, 10}
                                          : parse_all(d_values);
      const std::vector<Verdict> verdicts = scan(box, so);
      print_verdicts(verdicts, json, verbose, o);
      return any_fail(verdicts) ? kFailed : kOk;
    }
  } catch (const UsageError& e) {
    err << "ecq: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "ecq: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace ecq::cli

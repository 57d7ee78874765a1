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


#include "ecq/dataio.hpp"

#include <istream>
#include <ostream>

#include "ecq/error.hpp"

namespace ecq {

namespace {

using nlohmann::json;

Integer json_integer(const json& v, const std::string& what) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Integer(std::to_string(v.get<std::uint64_t>()))
                                  : Integer(std::to_string(v.get<std::int64_t>()));
  }
  if (v.is_string()) {
    try {
      return parse_integer(v.get<std::string>());
    } catch (const Error&) {
      throw Error(Errc::parse_error, what + ": \"" + v.get<std::string>() + "\" is not an integer");
    }
  }
  throw Error(Errc::parse_error, what + " must be an integer, got " + std::string(v.type_name()));
}

long small_integer(const json& v, const std::string& what, long minimum) {
  if (!v.is_number_integer()) {
    throw Error(Errc::parse_error, what + " must be an integer, got " + std::string(v.type_name()));
  }
  const long n = v.is_number_unsigned() ? static_cast<long>(v.get<std::uint64_t>()) : v.get<long>();
  if (n < minimum) {
    throw Error(Errc::parse_error, what + " must be >= " + std::to_string(minimum));
  }
  return n;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::not_applicable: return "not_applicable";
    case Status::skipped: return "skipped";
  }
  return "skipped";
}

WeierstrassCurve CurveRecord::curve() const {
  return WeierstrassCurve({Rational(a[0]), Rational(a[1]), Rational(a[2]), Rational(a[3]), Rational(a[4])});
}

std::string CurveRecord::name() const {
  if (label) return *label;
  std::string out = "[";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ',';
    out += a[i].get_str();
  }
  return out + "]";
}

CurveRecord parse_record(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::parse_error& err) {
    throw Error(Errc::parse_error, "invalid JSON at byte " + std::to_string(err.byte));
  }
  if (!j.is_object()) throw Error(Errc::parse_error, "record must be a JSON object");

  CurveRecord r;
  if (auto it = j.find("label"); it != j.end()) {
    if (!it->is_string()) throw Error(Errc::parse_error, "label must be a string");
    r.label = it->get<std::string>();
  }
  const auto a = j.find("a");
  if (a == j.end()) throw Error(Errc::parse_error, "missing key \"a\"");
  if (!a->is_array() || a->size() != 5) {
    throw Error(Errc::parse_error, "\"a\" must be an array of 5 integers");
  }
  for (std::size_t i = 0; i < 5; ++i) {
    r.a[i] = json_integer((*a)[i], "a[" + std::to_string(i) + "]");
  }
  if (auto it = j.find("rank"); it != j.end()) r.rank = small_integer(*it, "rank", 0);
  if (auto it = j.find("torsion"); it != j.end()) r.torsion = small_integer(*it, "torsion", 1);
  if (auto it = j.find("sha"); it != j.end()) r.sha = small_integer(*it, "sha", 1);
  if (auto it = j.find("tamagawa"); it != j.end()) {
    if (!it->is_object()) throw Error(Errc::parse_error, "tamagawa must be an object");
    std::map<long, long> tam;
    for (const auto& [key, value] : it->items()) {
      Integer p;
      try {
        p = parse_integer(key);
      } catch (const Error&) {
        throw Error(Errc::parse_error, "tamagawa key \"" + key + "\" is not an integer");
      }
      if (!p.fits_slong_p() || !is_prime(p)) {
        throw Error(Errc::parse_error, "tamagawa key \"" + key + "\" is not a prime");
      }
      tam[p.get_si()] = small_integer(value, "tamagawa[" + key + "]", 1);
    }
    r.tamagawa = std::move(tam);
  }
  try {
    (void)r.curve();
  } catch (const Error& err) {
    throw Error(Errc::parse_error, std::string("coefficients rejected: ") + err.what());
  }
  return r;
}

ParseResult parse_records(std::istream& in) {
  ParseResult out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.records.push_back(parse_record(line));
    } catch (const Error& err) {
      out.diagnostics.push_back({number, err.what()});
    }
  }
  if (in.bad()) throw std::ios_base::failure("error reading curve records");
  return out;
}

std::string serialize_record(const CurveRecord& r) {
  nlohmann::ordered_json j;
  if (r.label) j["label"] = *r.label;
  auto a = nlohmann::ordered_json::array();
  for (const Integer& x : r.a) {
    if (x.fits_slong_p()) {
      a.push_back(x.get_si());
    } else {
      a.push_back(x.get_str());
    }
  }
  j["a"] = std::move(a);
  if (r.rank) j["rank"] = *r.rank;
  if (r.torsion) j["torsion"] = *r.torsion;
  if (r.sha) j["sha"] = *r.sha;
  if (r.tamagawa) {
    auto t = nlohmann::ordered_json::object();
    for (const auto& [p, c] : *r.tamagawa) t[std::to_string(p)] = c;
    j["tamagawa"] = std::move(t);
  }
  return j.dump();
}

const CurveRecord* find_label(const std::vector<CurveRecord>& records, std::string_view label) {
  for (const CurveRecord& r : records) {
    if (r.label && *r.label == label) return &r;
  }
  return nullptr;
}

nlohmann::ordered_json to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["theorem"] = v.theorem;
  j["curve"] = v.curve;
  j["status"] = std::string(to_string(v.status));
  j["witness"] = v.witness;
  return j;
}

std::string to_json_line(const Verdict& v) { return to_json(v).dump(); }

void write_report(const std::vector<Verdict>& verdicts, std::ostream& out) {
  for (const Verdict& v : verdicts) out << to_json_line(v) << '\n';
}

}  // namespace ecq

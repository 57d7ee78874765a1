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

// JSON-lines curve records in, JSON-lines verdict reports out.
//
// Record grammar, one object per line (blank lines are skipped):
//   {"label": "11a1", "a": [0,-1,1,-10,-20], "rank": 0, "torsion": 5,
//    "sha": 1, "tamagawa": {"11": 5}}
// Only "a" is required. Coefficients may be JSON integers or decimal strings
// (for values beyond 64 bits). Unknown keys are ignored.

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecq/arith.hpp"
#include "ecq/curve.hpp"
#include "ecq/verdict.hpp"

namespace ecq {

struct CurveRecord {
  std::optional<std::string> label;
  std::array<Integer, 5> a;
  std::optional<long> rank;
  std::optional<long> torsion;
  std::optional<long> sha;
  std::optional<std::map<long, long>> tamagawa;

  WeierstrassCurve curve() const;
  /// The label if present, else the coefficient string.
  std::string name() const;

  friend bool operator==(const CurveRecord&, const CurveRecord&) = default;
};

struct ParseDiagnostic {
  std::size_t line = 0;  // 1-based
  std::string message;
};

struct ParseResult {
  std::vector<CurveRecord> records;
  std::vector<ParseDiagnostic> diagnostics;
};

/// Parses one record; throws Error(parse_error) with a description.
CurveRecord parse_record(std::string_view line);

/// Malformed lines are reported and skipped; the rest are returned in order.
/// Throws std::ios_base::failure only if the stream itself fails.
ParseResult parse_records(std::istream& in);

/// Canonical one-line JSON form (keys in the order label, a, rank, torsion, sha, tamagawa).
std::string serialize_record(const CurveRecord& r);

const CurveRecord* find_label(const std::vector<CurveRecord>& records, std::string_view label);

/// {"theorem":..,"curve":..,"status":..,"witness":{..}}
std::string to_json_line(const Verdict& v);
nlohmann::ordered_json to_json(const Verdict& v);

/// One line per verdict, in order.
void write_report(const std::vector<Verdict>& verdicts, std::ostream& out);

}  // namespace ecq

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

#include <string>
#include <string_view>

#include "json.hpp"

namespace ecq {

enum class Status { pass, fail, not_applicable, skipped };

std::string_view to_string(Status s);

/// Outcome of one property check on one curve.
struct Verdict {
  std::string theorem;  // descriptive check id, e.g. "twist_reduction"
  std::string curve;    // label or "[a1,a2,a3,a4,a6]"
  Status status = Status::skipped;
  nlohmann::ordered_json witness = nlohmann::ordered_json::object();
};

}  // namespace ecq

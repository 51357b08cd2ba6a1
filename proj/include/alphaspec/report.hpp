// Copyright 2026 The alphaspec Authors.
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

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace alphaspec {

using Json = nlohmann::ordered_json;

enum class ClaimStatus { pass, fail, inconclusive };
const char* status_name(ClaimStatus status);

/// Strict-inequality verdict for a numeric margin: pass when margin >= band,
/// fail when margin <= -band, inconclusive inside the band.
ClaimStatus classify_margin(double margin, double band);

struct ClaimRecord {
  std::string name;
  ClaimStatus status = ClaimStatus::pass;
  std::optional<double> margin;
  Json witness = Json::object();
};

struct StatusCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t inconclusive = 0;
};

/// Outcome of one verification campaign. Serialized as JSON Lines: a params
/// header, one line per claim, observation and input error, and a summary.
struct VerificationReport {
  static constexpr const char* kSchema = "v1";

  std::string campaign;
  Json params = Json::object();
  std::vector<ClaimRecord> claims;
  /// Informative records that are not assertions.
  std::vector<Json> observations;
  /// Per-input problems (e.g. unparseable corpus lines) that did not stop the run.
  std::vector<Json> errors;
  std::optional<double> elapsed_seconds;

  ClaimRecord& add(ClaimRecord claim);
  ClaimRecord& add_bool(std::string name, bool ok, Json witness = Json::object());
  /// Classifies with `band`; the margin is stored on the record.
  ClaimRecord& add_margin(std::string name, double margin, double band, Json witness = Json::object());

  StatusCounts counts() const;
  bool all_pass() const;
  void append(const VerificationReport& other);

  /// Timings are only written when `include_timings` is set so that repeated
  /// runs stay byte-identical.
  void write_jsonl(std::ostream& os, bool include_timings = false) const;
  void write_text(std::ostream& os) const;
};

}  // namespace alphaspec

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

#include "alphaspec/report.hpp"

#include <cmath>
#include <iomanip>

namespace alphaspec {

const char* status_name(ClaimStatus status) {
  switch (status) {
    case ClaimStatus::pass: return "pass";
    case ClaimStatus::fail: return "fail";
    case ClaimStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

ClaimStatus classify_margin(double margin, double band) {
  if (std::isnan(margin)) return ClaimStatus::inconclusive;
  if (margin >= band) return ClaimStatus::pass;
  if (margin <= -band) return ClaimStatus::fail;
  return ClaimStatus::inconclusive;
}

ClaimRecord& VerificationReport::add(ClaimRecord claim) {
  claims.push_back(std::move(claim));
  return claims.back();
}

ClaimRecord& VerificationReport::add_bool(std::string name, bool ok, Json witness) {
  return add(ClaimRecord{std::move(name), ok ? ClaimStatus::pass : ClaimStatus::fail, std::nullopt,
                         std::move(witness)});
}

ClaimRecord& VerificationReport::add_margin(std::string name, double margin, double band, Json witness) {
  return add(ClaimRecord{std::move(name), classify_margin(margin, band), margin, std::move(witness)});
}

StatusCounts VerificationReport::counts() const {
  StatusCounts c;
  for (const auto& claim : claims) {
    switch (claim.status) {
      case ClaimStatus::pass: ++c.pass; break;
      case ClaimStatus::fail: ++c.fail; break;
      case ClaimStatus::inconclusive: ++c.inconclusive; break;
    }
  }
  return c;
}

bool VerificationReport::all_pass() const {
  const auto c = counts();
  return c.fail == 0 && c.inconclusive == 0;
}

void VerificationReport::append(const VerificationReport& other) {
  claims.insert(claims.end(), other.claims.begin(), other.claims.end());
  observations.insert(observations.end(), other.observations.begin(), other.observations.end());
  errors.insert(errors.end(), other.errors.begin(), other.errors.end());
}

void VerificationReport::write_jsonl(std::ostream& os, bool include_timings) const {
  Json header;
  header["schema"] = kSchema;
  header["type"] = "params";
  header["campaign"] = campaign;
  header["params"] = params;
  os << header.dump() << "\n";
  for (const auto& claim : claims) {
    Json line;
    line["schema"] = kSchema;
    line["type"] = "claim";
    line["campaign"] = campaign;
    line["claim"] = claim.name;
    line["status"] = status_name(claim.status);
    line["margin"] = claim.margin ? Json(*claim.margin) : Json(nullptr);
    line["witness"] = claim.witness;
    os << line.dump() << "\n";
  }
  for (const auto& obs : observations) {
    Json line;
    line["schema"] = kSchema;
    line["type"] = "observation";
    line["campaign"] = campaign;
    line["data"] = obs;
    os << line.dump() << "\n";
  }
  for (const auto& err : errors) {
    Json line;
    line["schema"] = kSchema;
    line["type"] = "error";
    line["campaign"] = campaign;
    line["error"] = err;
    os << line.dump() << "\n";
  }
  const auto c = counts();
  Json summary;
  summary["schema"] = kSchema;
  summary["type"] = "summary";
  summary["campaign"] = campaign;
  summary["pass"] = c.pass;
  summary["fail"] = c.fail;
  summary["inconclusive"] = c.inconclusive;
  summary["observations"] = observations.size();
  summary["errors"] = errors.size();
  if (include_timings && elapsed_seconds) summary["elapsed_seconds"] = *elapsed_seconds;
  os << summary.dump() << "\n";
}

void VerificationReport::write_text(std::ostream& os) const {
  os << "campaign " << campaign << "\n";
  for (const auto& claim : claims) {
    os << "  [" << status_name(claim.status) << "] " << claim.name;
    if (claim.margin) os << "  margin=" << std::setprecision(6) << *claim.margin;
    os << "\n";
    if (claim.status != ClaimStatus::pass && !claim.witness.empty()) os << "      " << claim.witness.dump() << "\n";
  }
  for (const auto& err : errors) os << "  [error] " << err.dump() << "\n";
  const auto c = counts();
  os << "  " << c.pass << " pass, " << c.fail << " fail, " << c.inconclusive << " inconclusive";
  if (!observations.empty()) os << ", " << observations.size() << " observations";
  os << "\n";
}

}  // namespace alphaspec

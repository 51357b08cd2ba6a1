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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "alphaspec/report.hpp"

using namespace alphaspec;

TEST_CASE("margin classification") {
  CHECK(classify_margin(1e-3, 1e-6) == ClaimStatus::pass);
  CHECK(classify_margin(1e-6, 1e-6) == ClaimStatus::pass);
  CHECK(classify_margin(5e-7, 1e-6) == ClaimStatus::inconclusive);
  CHECK(classify_margin(0.0, 1e-6) == ClaimStatus::inconclusive);
  CHECK(classify_margin(-1e-6, 1e-6) == ClaimStatus::fail);
  CHECK(std::string(status_name(ClaimStatus::inconclusive)) == "inconclusive");
}

TEST_CASE("JSON lines layout") {
  VerificationReport r;
  r.campaign = "demo";
  r.params["n"] = 18;
  r.add_bool("first", true);
  r.add_margin("second", 1e-8, 1e-6, {{"k", 1}});
  r.observations.push_back({{"line", 3}});
  r.errors.push_back({{"line", 4}, {"message", "bad"}});
  r.elapsed_seconds = 1.5;
  CHECK_FALSE(r.all_pass());
  const StatusCounts c = r.counts();
  CHECK(c.pass == 1);
  CHECK(c.inconclusive == 1);

  std::ostringstream plain;
  r.write_jsonl(plain);
  std::istringstream lines(plain.str());
  std::vector<Json> records;
  for (std::string line; std::getline(lines, line);) records.push_back(Json::parse(line));
  REQUIRE(records.size() == 6);
  for (const auto& rec : records) CHECK(rec["schema"] == "v1");
  CHECK(records.front()["type"] == "params");
  CHECK(records[2]["status"] == "inconclusive");
  CHECK(records[3]["type"] == "observation");
  CHECK(records[4]["type"] == "error");
  CHECK(records.back()["type"] == "summary");
  CHECK(records.back()["inconclusive"] == 1);
  CHECK_FALSE(records.back().contains("elapsed_seconds"));
  // Field order is fixed.
  CHECK(plain.str().rfind("{\"schema\":\"v1\",\"type\":\"params\"", 0) == 0);

  std::ostringstream timed;
  r.write_jsonl(timed, true);
  CHECK(timed.str().find("elapsed_seconds") != std::string::npos);
}

TEST_CASE("appending merges in order") {
  VerificationReport a;
  a.add_bool("x", true);
  VerificationReport b;
  b.add_bool("y", false);
  b.errors.push_back({{"line", 1}});
  a.append(b);
  REQUIRE(a.claims.size() == 2);
  CHECK(a.claims[1].name == "y");
  CHECK(a.errors.size() == 1);
  CHECK(a.counts().fail == 1);
}

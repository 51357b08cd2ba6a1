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

// Acceptance suite: one PASS/FAIL line per criterion, each with its time budget.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "alphaspec/identities.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verifier.hpp"

using namespace alphaspec;

namespace {

const Rational kAlphaGrid[] = {0, Rational(1, 8), Rational(1, 4), Rational(3, 8), Rational(1, 2)};
const std::size_t kOrders[] = {18, 20};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool condition, const std::string& what) {
    if (condition) return;
    if (ok) detail = what;
    ok = false;
  }
};

const ClaimRecord* find_claim(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.claims)
    if (c.name == name) return &c;
  return nullptr;
}

Outcome identities() {
  Outcome out;
  for (const auto& check : verify_all_identities()) out.expect(check.holds, check.name + " does not hold");
  const DifferenceCubic d = derive_difference_cubic();
  out.expect(d.cubic.has_value() && d.remainder.is_zero(), "difference not divisible by s - 1");
  if (d.cubic) {
    const MPoly a = var_a();
    const MPoly h6 = d.cubic->substitute(Var::x, var_n() - 5)
                         .substitute(Var::n, 2 * var_s() + 6)
                         .evaluate_partial(Assignment().set(Var::s, 6));
    out.expect(h6 == MPoly(-338) * a.pow(3) + MPoly(1382) * a.pow(2) + MPoly(-1810) * a + MPoly(626),
               "boundary value at s = 6 differs");
  }
  return out;
}

Outcome clique_radius() {
  Outcome out;
  for (std::size_t n : {18, 20, 30, 40})
    for (double alpha : {0.0, 0.25, 0.5, 0.75}) {
      const double rho = spectral_radius(alpha_matrix(complete(n - 4), alpha).entries);
      out.expect(std::abs(rho - static_cast<double>(n - 5)) <= 1e-9, "K_" + std::to_string(n - 4) + " radius");
    }
  return out;
}

Outcome quotient_paths() {
  Outcome out;
  for (std::size_t n : kOrders)
    for (const Rational& alpha_q : kAlphaGrid) {
      const double alpha = to_double(alpha_q);
      auto check = [&](const Graph& g, const Partition& p, const std::string& label) {
        const AlphaMatrix m = alpha_matrix(g, alpha);
        const double gap = std::abs(spectral_radius(m.entries) - quotient_largest_eigenvalue(quotient(m, p)));
        out.expect(gap <= 1e-8, label + " at n=" + std::to_string(n) + " alpha=" + to_string(alpha_q));
      };
      check(build_extremal(n), family_partition(extremal_spec(n)), "extremal graph");
      for (std::size_t s = 2; s <= 7; ++s)
        check(build_family(separator_spec(n, s)), separator_partition(n, s), "separator s=" + std::to_string(s));
    }
  return out;
}

std::vector<VerificationReport> ordering_reports() {
  std::vector<VerificationReport> reports;
  for (std::size_t n : kOrders)
    for (const Rational& alpha : kAlphaGrid) {
      TheoremParams params;
      params.n = n;
      params.alpha = alpha;
      reports.push_back(verify_extremal_ordering(params, workers()));
    }
  return reports;
}

Outcome separator_ordering() {
  Outcome out;
  for (const auto& r : ordering_reports()) {
    const std::string at = " n=" + r.params["n"].dump() + " alpha=" + r.params["alpha"].get<std::string>();
    const std::size_t n = r.params["n"];
    for (std::size_t s = 2; 2 * s + 6 <= n; ++s) {
      const ClaimRecord* c = find_claim(r, "separator_ordering s=" + std::to_string(s));
      out.expect(c && c->status == ClaimStatus::pass && c->margin && *c->margin >= 1e-6,
                 "separator ordering s=" + std::to_string(s) + at);
    }
  }
  return out;
}

Outcome unique_maximizer() {
  Outcome out;
  for (const auto& r : ordering_reports()) {
    const std::string at = " n=" + r.params["n"].dump() + " alpha=" + r.params["alpha"].get<std::string>();
    const ClaimRecord* c = find_claim(r, "unique_maximizer");
    out.expect(c && c->status == ClaimStatus::pass, "maximizer" + at);
    for (const auto& claim : r.claims)
      if (claim.name.rfind("g1 ", 0) == 0) out.expect(claim.status == ClaimStatus::pass, claim.name + at);
  }
  return out;
}

Outcome extremal_hypotheses() {
  Outcome out;
  const VerificationReport r = verify_extremal_hypotheses(18);
  for (const char* name : {"connected", "one_binding", "no_perfect_matching"}) {
    const ClaimRecord* c = find_claim(r, name);
    out.expect(c && c->status == ClaimStatus::pass, name);
  }
  return out;
}

Outcome matching_oracle() {
  Outcome out;
  const std::size_t expected[] = {2, 11, 156, 12346};
  std::size_t k = 0;
  for (std::size_t n : {2, 4, 6, 8}) {
    std::ifstream in(std::string(ALPHASPEC_CORPUS_DIR) + "/graphs_n" + std::to_string(n) + ".g6");
    const VerificationReport r = scan_corpus(in, 0, workers());
    const ClaimRecord* c = find_claim(r, "tutte_agreement");
    out.expect(c && c->status == ClaimStatus::pass && c->witness["graphs"] == expected[k] && r.errors.empty(),
               "corpus n=" + std::to_string(n));
    ++k;
  }
  const VerificationReport random = verify_tutte_oracle_random(10000, 10, 2026, workers());
  out.expect(random.all_pass(), "random n=10 graphs");
  return out;
}

Outcome transfers() {
  Outcome out;
  const VerificationReport r = verify_transfer_monotonicity(10000, 2026, workers());
  out.expect(r.all_pass(), "transfer trial below margin");
  return out;
}

Outcome interlacing() {
  Outcome out;
  const VerificationReport r = verify_interlacing(1000, 2026);
  for (const char* name : {"interlacing_random", "separator_second_eigenvalue"}) {
    const ClaimRecord* c = find_claim(r, name);
    out.expect(c && c->status == ClaimStatus::pass, name);
  }
  return out;
}

Outcome positivity() {
  Outcome out;
  const VerificationReport r = verify_positivity_grids();
  out.expect(r.claims.size() == 3, "grid claims missing");
  for (const auto& c : r.claims) out.expect(c.status == ClaimStatus::pass && c.margin && *c.margin > 0, c.name);
  return out;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "symbolic identity suite", 5, identities},
      {2, "clique radius n - 5", 5, clique_radius},
      {3, "full matrix and quotient agree", 30, quotient_paths},
      {4, "separator graphs below the extremal graph", 60, separator_ordering},
      {5, "unique maximizer over the family", 600, unique_maximizer},
      {6, "extremal graph hypotheses at n = 18", 120, extremal_hypotheses},
      {7, "blossom and Tutte scan agree", 300, matching_oracle},
      {8, "clique transfers raise the radius", 300, transfers},
      {9, "interlacing and the second-eigenvalue bound", 60, interlacing},
      {10, "positivity grids", 60, positivity},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (outcome.ok && seconds > c.budget_seconds) {
      outcome.ok = false;
      outcome.detail = "over time budget";
    }
    if (!outcome.ok) ++failures;
    std::printf("%s criterion %d: %s (%.2f s of %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", c.id, c.title, seconds,
                c.budget_seconds, outcome.ok ? "" : " -- ", outcome.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}

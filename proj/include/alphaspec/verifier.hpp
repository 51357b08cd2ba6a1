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
#include <cstdint>
#include <istream>
#include <optional>
#include <vector>

#include "alphaspec/graph.hpp"
#include "alphaspec/mpoly.hpp"
#include "alphaspec/rational.hpp"
#include "alphaspec/report.hpp"
#include "alphaspec/spectral.hpp"

namespace alphaspec {

/// Run parameters for the extremal campaign. `margin` is the inconclusive band for strict
/// inequalities, `tol` the eigenvalue tolerance.
struct TheoremParams {
  std::size_t n = 18;
  Rational alpha = 0;
  double tol = 1e-10;
  double margin = 1e-6;

  /// Throws std::invalid_argument unless n is even, n >= 10 and alpha in [0, 1/2].
  void validate() const;
  Json to_json() const;
};

/// max{18, (2 + 8a) / (1 - 2a)} on [0, 1/2), and 18 at a = 1/2.
Rational n_alpha_threshold(const Rational& alpha);

/// K_1 v (K_{n-5} u K_3 u K_1) as a family spec, and as a graph (n even, >= 10).
JoinFamilySpec extremal_spec(std::size_t n);
Graph build_extremal(std::size_t n);

/// K_s v (K_{n-2s-3} u K_3 u sK_1); requires n >= 2s + 4.
JoinFamilySpec separator_spec(std::size_t n, std::size_t s);
/// The four-cell partition K_s, K_{n-2s-3}, K_3, sK_1 of separator_spec(n, s).
Partition separator_partition(std::size_t n, std::size_t s);

/// Every K_s v (K_{n_1} u ... u K_{n_{s+2}}) with s >= 1, all parts odd, the
/// two largest parts >= 3 and s + sum(parts) = n. Sorted by (s, parts).
std::vector<JoinFamilySpec> enumerate_g1_configs(std::size_t n);

/// Structural fingerprint (degree multiset) then an explicit isomorphism.
bool is_isomorphic_to_extremal(const Graph& g);

/// Rational interval certified to contain the largest real root of the
/// polynomial with coefficients `coeffs` (lowest first): p(lo) and p(hi) have
/// opposite signs and every Taylor coefficient of p at hi is positive, so no
/// root exceeds hi. Requires a real-rooted polynomial for success.
struct RootBracket {
  Rational lo;
  Rational hi;
};
std::optional<RootBracket> certify_largest_root(const std::vector<Rational>& coeffs, double estimate,
                                                double radius = 1e-9);

/// Spectral ordering over the whole G_1 family, the separator graphs and the
/// quotient cross-checks for one (n, alpha).
VerificationReport verify_extremal_ordering(const TheoremParams& params, unsigned workers = 1);

/// Connected, 1-binding (exact scan) and no perfect matching for the extremal
/// graph; 10 <= n <= 24.
VerificationReport verify_extremal_hypotheses(std::size_t n);

/// Random (+1, -1) transfers between clique parts of K_s v (...), n <= 24.
VerificationReport verify_transfer_monotonicity(std::size_t trials, std::uint64_t seed,
                                                unsigned workers = 1);

/// Blossom matching versus the exhaustive Tutte scan on random graphs.
VerificationReport verify_tutte_oracle_random(std::size_t trials, std::size_t n, std::uint64_t seed,
                                              unsigned workers = 1);

/// Interlacing on random symmetric matrices (orders 4-12) and the
/// second-eigenvalue bound for the symmetrized separator quotient.
VerificationReport verify_interlacing(std::size_t trials, std::uint64_t seed);

/// Tutte oracle, transfers and interlacing in one report.
VerificationReport verify_lemmas(std::size_t trials, std::uint64_t seed, unsigned workers = 1);

/// Every exact identity, as claims.
VerificationReport verify_identities();
/// Displayed intermediate reductions checked line by line.
VerificationReport verify_audit();
/// Exact sign grids for the slope at x = n - 5, the boundary in n and in s.
VerificationReport verify_positivity_grids();

/// Reads graph6 lines; per graph compares matching and Tutte scan, and records
/// (rho_a(G) - rho_a(G*), PM?) for connected 1-binding graphs of even order.
VerificationReport scan_corpus(std::istream& in, const Rational& alpha, unsigned workers = 1);

}  // namespace alphaspec

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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "alphaspec/mpoly.hpp"

namespace alphaspec {

/// Square matrix of polynomial entries in {n, s, a}; order at most 8.
class SymbolicMatrix {
 public:
  static constexpr std::size_t kMaxOrder = 8;

  explicit SymbolicMatrix(std::size_t order);
  SymbolicMatrix(std::initializer_list<std::initializer_list<MPoly>> rows);

  std::size_t order() const { return order_; }
  const MPoly& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
  MPoly& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }
  SymbolicMatrix evaluate_partial(const Assignment& at) const;

 private:
  std::size_t order_;
  std::vector<MPoly> entries_;
};

/// det(x I - m) by cofactor expansion along the first row.
MPoly charpoly(const SymbolicMatrix& m);

/// Quotient of A_a(K_s v (K_{n-2s-3} u K_3 u sK_1)) over the cells
/// K_s, K_{n-2s-3}, K_3, sK_1.
SymbolicMatrix separator_quotient_symbolic();
/// Quotient of A_a(K_1 v (K_{n-5} u K_3 u K_1)) over K_1, K_{n-5}, K_3, K_1.
SymbolicMatrix extremal_quotient_symbolic();

/// Transcribed reference polynomial by fixture name (e.g. "b2_charpoly").
/// Throws std::out_of_range for unknown names.
MPoly load_fixture(std::string_view name);
std::vector<std::string> fixture_names();

struct CoefficientMismatch {
  std::string label;
  Exponents exponents{};
  Rational expected;
  Rational got;

  std::string describe() const;
};

/// Outcome of an exact identity check. A false result is a finding about the
/// transcribed displays, not an error.
struct IdentityCheck {
  std::string name;
  bool holds = true;
  std::vector<CoefficientMismatch> mismatches;
  std::vector<std::string> notes;

  IdentityCheck() = default;
  explicit IdentityCheck(std::string check_name) : name(std::move(check_name)) {}

  /// Records `derived == expected` coefficient by coefficient.
  void compare(const std::string& label, const MPoly& derived, const MPoly& expected);
  void require(const std::string& label, bool ok);
};

/// charpoly of the separator quotient against its transcription, and the same
/// for the extremal quotient.
IdentityCheck verify_separator_charpoly();

struct DifferenceCubic {
  std::optional<MPoly> cubic;
  MPoly remainder;
  IdentityCheck check;
};
/// Divides charpoly(separator) - charpoly(extremal) by (s - 1) exactly and
/// compares the quotient with its transcription.
DifferenceCubic derive_difference_cubic();

/// The cubic at x = n - 5, then at n = 2s + 6, then at s = 6.
IdentityCheck verify_boundary_chain();

/// The cubic's x-derivative at a = 1/2, and eight times it at x = n - 5.
IdentityCheck verify_half_alpha_slope();

/// 3(1-2a)(n-5) + (2a^2+a)n + (a^2-a-1)s + a^2-6a-5: the scaled gap between
/// n - 5 and the axis of the cubic's derivative.
MPoly axis_gap();
/// Regrouping, boundary substitutions n := 2s+6, (1-2a)n := 2+8a, s := 2,
/// reducing to 23a^2; plus an exact sign check on a grid of the constrained region.
IdentityCheck verify_axis_gap();

/// Every exact identity above, in a fixed order.
std::vector<IdentityCheck> verify_all_identities();

/// Step-by-step audit of the displayed intermediate reductions (slope bounds,
/// boundary slopes, values at n = 18). Each entry compares a displayed line
/// with what exact arithmetic derives from the previous displayed line.
std::vector<IdentityCheck> audit_displayed_steps();

/// One axis of an evaluation grid: lo, lo + step, ..., up to hi inclusive.
struct GridAxis {
  Var var;
  Rational lo;
  Rational hi;
  Rational step;
};

struct GridRegion {
  std::vector<GridAxis> axes;
  std::vector<std::function<bool(const Assignment&)>> constraints;
};

/// Sampling certificate only, not a positivity proof.
struct SignGridReport {
  std::size_t points = 0;
  Rational min_value;
  Assignment argmin;
  std::size_t non_positive_count = 0;
  /// First few non-positive points in grid order.
  std::vector<Assignment> non_positive;

  bool all_positive() const { return points > 0 && non_positive_count == 0; }
};

/// Exact evaluation of `p` at every grid point (first axis outermost) that
/// satisfies all constraints. Ties in the minimum keep the earliest point.
/// Throws std::invalid_argument when no point survives the constraints.
SignGridReport sign_grid(const MPoly& p, const GridRegion& region);

}  // namespace alphaspec

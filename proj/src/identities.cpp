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

#include "alphaspec/identities.hpp"

#include <stdexcept>
#include <string>

#include "embedded_fixtures.hpp"

namespace alphaspec {


namespace {

MPoly minor_determinant(const std::vector<std::vector<MPoly>>& m, std::vector<std::size_t>& cols,
                        std::size_t row) {
  if (row == m.size()) return 1;
  MPoly total;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const MPoly& entry = m[row][cols[k]];
    if (entry.is_zero()) continue;
    const std::size_t col = cols[k];
    cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(k));
    MPoly term = entry * minor_determinant(m, cols, row + 1);
    cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(k), col);
    if (k % 2 == 0) total += term;
    else total -= term;
  }
  return total;
}

std::string exponent_label(const Exponents& e) {
  std::string out;
  const char* names[] = {"x", "n", "s", "a"};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    if (!out.empty()) out += " ";
    out += std::string(names[i]) + "^" + std::to_string(unsigned{e[i]});
  }
  return out;
}

const MPoly& difference_cubic() {
  static const MPoly cubic = [] {
    auto derived = derive_difference_cubic();
    if (!derived.cubic) throw std::logic_error("difference cubic: division by (s - 1) is inexact");
    return *derived.cubic;
  }();
  return cubic;
}

Rational half() { return Rational(1, 2); }

}  // namespace

SymbolicMatrix::SymbolicMatrix(std::size_t order) : order_(order), entries_(order * order) {
  if (order > kMaxOrder) throw std::invalid_argument("SymbolicMatrix: order above 8");
}

SymbolicMatrix::SymbolicMatrix(std::initializer_list<std::initializer_list<MPoly>> rows)
    : SymbolicMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != order_) throw std::invalid_argument("SymbolicMatrix: not square");
    std::size_t j = 0;
    for (const auto& entry : row) (*this)(i, j++) = entry;
    ++i;
  }
}

SymbolicMatrix SymbolicMatrix::evaluate_partial(const Assignment& at) const {
  SymbolicMatrix out(order_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].evaluate_partial(at);
  return out;
}

MPoly charpoly(const SymbolicMatrix& m) {
  const std::size_t r = m.order();
  std::vector<std::vector<MPoly>> shifted(r, std::vector<MPoly>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) shifted[i][j] = (i == j ? var_x() : MPoly()) - m(i, j);
  std::vector<std::size_t> cols(r);
  for (std::size_t j = 0; j < r; ++j) cols[j] = j;
  return minor_determinant(shifted, cols, 0);
}

SymbolicMatrix separator_quotient_symbolic() {
  const MPoly n = var_n(), s = var_s(), a = var_a();
  const MPoly one_minus_a = 1 - a;
  return SymbolicMatrix{
      {a * n - a * s + s - 1, one_minus_a * (n - 2 * s - 3), 3 - 3 * a, one_minus_a * s},
      {one_minus_a * s, n + a * s - 2 * s - 4, 0, 0},
      {one_minus_a * s, 0, a * s + 2, 0},
      {one_minus_a * s, 0, 0, a * s},
  };
}

SymbolicMatrix extremal_quotient_symbolic() {
  const MPoly n = var_n(), a = var_a();
  const MPoly one_minus_a = 1 - a;
  return SymbolicMatrix{
      {a * n - a, one_minus_a * (n - 5), 3 - 3 * a, one_minus_a},
      {one_minus_a, n + a - 6, 0, 0},
      {one_minus_a, 0, a + 2, 0},
      {one_minus_a, 0, 0, a},
  };
}

MPoly load_fixture(std::string_view name) {
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    if (name == detail::kEmbeddedFixtures[i].name)
      return parse_term_table(detail::kEmbeddedFixtures[i].text);
  throw std::out_of_range("unknown fixture: " + std::string(name));
}

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    out.emplace_back(detail::kEmbeddedFixtures[i].name);
  return out;
}

std::string CoefficientMismatch::describe() const {
  return label + ": coefficient of [" + exponent_label(exponents) + "] expected " +
         to_string(expected) + " got " + to_string(got);
}

void IdentityCheck::compare(const std::string& label, const MPoly& derived, const MPoly& expected) {
  const MPoly diff = derived - expected;
  for (const auto& [e, c] : diff.terms()) {
    mismatches.push_back({label, e, expected.coefficient(e), derived.coefficient(e)});
    holds = false;
  }
}

void IdentityCheck::require(const std::string& label, bool ok) {
  if (ok) return;
  holds = false;
  notes.push_back(label + ": violated");
}

IdentityCheck verify_separator_charpoly() {
  IdentityCheck check{"separator_charpoly"};
  check.compare("charpoly(B2)", charpoly(separator_quotient_symbolic()), load_fixture("b2_charpoly"));
  check.compare("charpoly(B*)", charpoly(extremal_quotient_symbolic()), load_fixture("bstar_charpoly"));
  return check;
}

DifferenceCubic derive_difference_cubic() {
  DifferenceCubic out{std::nullopt, MPoly(), IdentityCheck{"difference_cubic"}};
  const MPoly difference =
      charpoly(separator_quotient_symbolic()) - charpoly(extremal_quotient_symbolic());
  auto division = divide(difference, var_s() - 1);
  out.remainder = division.remainder;
  if (!division.remainder.is_zero()) {
    out.check.holds = false;
    out.check.notes.push_back("division by (s - 1) leaves remainder " + division.remainder.to_string());
    return out;
  }
  out.cubic = division.quotient;
  out.check.compare("difference / (s - 1)", *out.cubic, load_fixture("difference_cubic"));
  return out;
}

IdentityCheck verify_boundary_chain() {
  IdentityCheck check{"boundary_chain"};
  const MPoly at_clique_radius = difference_cubic().substitute(Var::x, var_n() - 5);
  check.compare("cubic at x = n - 5", at_clique_radius, load_fixture("boundary_in_n"));
  const MPoly at_boundary = at_clique_radius.substitute(Var::n, 2 * var_s() + 6);
  check.compare("boundary at n = 2s + 6", at_boundary, load_fixture("boundary_in_s"));
  check.compare("boundary at s = 6", at_boundary.substitute(Var::s, 6), load_fixture("boundary_at_s6"));
  return check;
}

IdentityCheck verify_half_alpha_slope() {
  IdentityCheck check{"half_alpha_slope"};
  const MPoly slope = difference_cubic().differentiate(Var::x).substitute(Var::a, half());
  check.compare("slope at a = 1/2", slope, load_fixture("half_alpha_slope"));
  check.compare("8 * slope at x = n - 5", 8 * slope.substitute(Var::x, var_n() - 5),
                load_fixture("half_alpha_slope_at_n_minus_5"));
  return check;
}

MPoly axis_gap() {
  const MPoly n = var_n(), s = var_s(), a = var_a();
  return 3 * (1 - 2 * a) * (n - 5) + (2 * a * a + a) * n + (a * a - a - 1) * s + a * a - 6 * a - 5;
}

IdentityCheck verify_axis_gap() {
  IdentityCheck check{"axis_gap"};
  const MPoly gap = axis_gap();
  const MPoly a = var_a();
  check.compare("regrouped", gap, load_fixture("axis_gap_regrouped"));

  // Split the n-coefficient into (1 - 2a) plus the part bounded via n >= 2s + 6.
  const MPoly bounded_slope = gap.coefficient_of(Var::n, 1) - (1 - 2 * a);
  const MPoly rest = gap.coefficient_of(Var::n, 0);
  const MPoly in_s = bounded_slope * (2 * var_s() + 6) + (2 + 8 * a) + rest;
  check.compare("after n := 2s + 6, (1 - 2a)n := 2 + 8a", in_s, load_fixture("axis_gap_in_s"));
  check.compare("after s := 2", in_s.substitute(Var::s, 2), load_fixture("axis_gap_reduced"));

  const MPoly s_slope = in_s.coefficient_of(Var::s, 1);
  for (int k = 0; k <= 10; ++k) {
    const Assignment at = Assignment().set(Var::a, make_rational(k, 20));
    check.require("n-coefficient positive at a=" + to_string(make_rational(k, 20)),
                  bounded_slope.evaluate(at) > 0);
    check.require("s-coefficient positive at a=" + to_string(make_rational(k, 20)), s_slope.evaluate(at) > 0);
  }

  GridRegion region;
  region.axes = {{Var::a, 0, Rational(2, 5), Rational(1, 10)},
                 {Var::s, 2, 6, 1},
                 {Var::n, 18, 40, 1}};
  region.constraints.emplace_back([](const Assignment& at) {
    return *at.get(Var::n) >= 2 * *at.get(Var::s) + 6;
  });
  region.constraints.emplace_back([](const Assignment& at) {
    const Rational& al = *at.get(Var::a);
    return Rational(*at.get(Var::n) * (1 - 2 * al)) >= Rational(2 + 8 * al);
  });
  const SignGridReport grid = sign_grid(gap, region);
  check.require("gap >= 0 on the constrained grid", grid.min_value >= 0);
  return check;
}

std::vector<IdentityCheck> verify_all_identities() {
  std::vector<IdentityCheck> out;
  out.push_back(verify_separator_charpoly());
  out.push_back(derive_difference_cubic().check);
  out.push_back(verify_boundary_chain());
  out.push_back(verify_half_alpha_slope());
  out.push_back(verify_axis_gap());
  return out;
}

std::vector<IdentityCheck> audit_displayed_steps() {
  std::vector<IdentityCheck> out;
  const MPoly& cubic = difference_cubic();
  const MPoly n = var_n(), s = var_s();

  auto single = [&](const std::string& name, const MPoly& derived, const std::string& fixture) {
    IdentityCheck c{name};
    c.compare(name, derived, load_fixture(fixture));
    out.push_back(std::move(c));
  };

  single("cubic_slope", cubic.differentiate(Var::x), "difference_cubic_slope");
  single("slope_at_n_minus_5", cubic.differentiate(Var::x).substitute(Var::x, n - 5),
         "slope_at_n_minus_5");
  single("slope_bound_in_s", load_fixture("slope_at_n_minus_5").substitute(Var::n, 2 * s + 6),
         "slope_bound_in_s");
  single("slope_bound_at_s2", load_fixture("slope_bound_in_s").substitute(Var::s, 2),
         "slope_bound_at_s2");

  const MPoly half_at_n5 = load_fixture("half_alpha_slope_at_n_minus_5") * MPoly(Rational(1, 8));
  single("half_alpha_bound_large_s", half_at_n5.substitute(Var::n, 2 * s + 6), "half_alpha_bound_large_s");
  single("half_alpha_bound_small_s", half_at_n5.substitute(Var::n, 18), "half_alpha_bound_small_s");

  const MPoly boundary = load_fixture("boundary_in_n");
  single("boundary_slope_at_2s_plus_6", boundary.differentiate(Var::n).substitute(Var::n, 2 * s + 6),
         "boundary_slope_at_2s_plus_6");
  single("boundary_slope_bound_at_s6", load_fixture("boundary_slope_at_2s_plus_6").substitute(Var::s, 6),
         "boundary_slope_bound_at_s6");

  const MPoly boundary_s = load_fixture("boundary_in_s");
  single("boundary_in_s_slope", boundary_s.differentiate(Var::s), "boundary_in_s_slope");
  single("boundary_in_s_slope_at_s6", boundary_s.differentiate(Var::s).substitute(Var::s, 6),
         "boundary_in_s_slope_at_s6");

  single("boundary_slope_at_18", boundary.differentiate(Var::n).substitute(Var::n, 18),
         "boundary_slope_at_18");
  const MPoly slope18 = load_fixture("boundary_slope_at_18");
  for (int sv = 2; sv <= 5; ++sv)
    single("boundary_slope_at_18_s" + std::to_string(sv), slope18.substitute(Var::s, sv),
           "boundary_slope_at_18_s" + std::to_string(sv));

  single("boundary_at_18", boundary.substitute(Var::n, 18), "boundary_at_18");
  const MPoly at18 = load_fixture("boundary_at_18");
  for (int sv = 2; sv <= 5; ++sv)
    single("boundary_at_18_s" + std::to_string(sv), at18.substitute(Var::s, sv),
           "boundary_at_18_s" + std::to_string(sv));
  return out;
}

SignGridReport sign_grid(const MPoly& p, const GridRegion& region) {
  for (const auto& axis : region.axes)
    if (axis.step <= 0 || axis.hi < axis.lo) throw std::invalid_argument("sign_grid: bad axis");

  constexpr std::size_t kKeepNonPositive = 16;
  SignGridReport report;
  Assignment at;
  std::function<void(std::size_t)> walk = [&](std::size_t depth) {
    if (depth == region.axes.size()) {
      for (const auto& keep : region.constraints)
        if (!keep(at)) return;
      const Rational value = p.evaluate(at);
      if (report.points == 0 || value < report.min_value) {
        report.min_value = value;
        report.argmin = at;
      }
      ++report.points;
      if (value <= 0) {
        ++report.non_positive_count;
        if (report.non_positive.size() < kKeepNonPositive) report.non_positive.push_back(at);
      }
      return;
    }
    const GridAxis& axis = region.axes[depth];
    for (Rational v = axis.lo; v <= axis.hi; v += axis.step) {
      at.set(axis.var, v);
      walk(depth + 1);
    }
  };
  walk(0);
  if (report.points == 0) throw std::invalid_argument("sign_grid: empty region");
  return report;
}

}  // namespace alphaspec

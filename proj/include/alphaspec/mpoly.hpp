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

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "alphaspec/rational.hpp"

namespace alphaspec {

/// The four indeterminates used throughout: x (spectral variable), n (order),
/// s (separator size) and a (alpha).
enum class Var : std::uint8_t { x = 0, n = 1, s = 2, a = 3 };
inline constexpr std::size_t kVarCount = 4;

const char* var_name(Var v);

/// Exponent vector (e_x, e_n, e_s, e_a). Lexicographic comparison of the array
/// is the monomial order used for division, x > n > s > a.
using Exponents = std::array<std::uint8_t, kVarCount>;

/// Partial assignment of rationals to variables.
class Assignment {
 public:
  Assignment() = default;
  Assignment& set(Var v, Rational value);
  Assignment with(Var v, Rational value) const;
  const std::optional<Rational>& get(Var v) const { return values_[static_cast<std::size_t>(v)]; }
  std::string to_string() const;
  bool operator==(const Assignment&) const = default;

 private:
  std::array<std::optional<Rational>, kVarCount> values_;
};

/// Exact multivariate polynomial over Q. Zero coefficients are never stored,
/// so two polynomials are equal iff their term maps are equal.
class MPoly {
 public:
  using Terms = std::map<Exponents, Rational>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  MPoly(long c);             // NOLINT(google-explicit-constructor)
  MPoly(int c) : MPoly(static_cast<long>(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly monomial(const Rational& c, const Exponents& e);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Exponents& e) const;
  unsigned degree(Var v) const;
  /// Collects the coefficient polynomial of v^power.
  MPoly coefficient_of(Var v, unsigned power) const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  friend MPoly operator+(MPoly lhs, const MPoly& rhs) { return lhs += rhs; }
  friend MPoly operator-(MPoly lhs, const MPoly& rhs) { return lhs -= rhs; }
  friend MPoly operator*(const MPoly& lhs, const MPoly& rhs);
  MPoly pow(unsigned k) const;
  bool operator==(const MPoly& other) const = default;

  /// Exact value; throws std::invalid_argument if a variable that occurs is unassigned.
  Rational evaluate(const Assignment& at) const;
  /// Substitutes the assigned variables and keeps the others symbolic.
  MPoly evaluate_partial(const Assignment& at) const;
  MPoly substitute(Var v, const MPoly& replacement) const;
  MPoly differentiate(Var v) const;
  /// Quotient when `divisor` divides exactly, std::nullopt otherwise.
  std::optional<MPoly> divide_exact(const MPoly& divisor) const;

  /// Coefficients c_0..c_d of a polynomial in `v` alone; throws otherwise.
  std::vector<Rational> univariate_coefficients(Var v) const;

  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

struct DivisionResult {
  MPoly quotient;
  MPoly remainder;
};

/// Multivariate division by a single divisor in lex order: terms whose leading
/// monomial is not divisible by the divisor's leading monomial go to the remainder.
DivisionResult divide(const MPoly& dividend, const MPoly& divisor);

inline MPoly var_x() { return MPoly::variable(Var::x); }
inline MPoly var_n() { return MPoly::variable(Var::n); }
inline MPoly var_s() { return MPoly::variable(Var::s); }
inline MPoly var_a() { return MPoly::variable(Var::a); }

/// Plain-text term table: one "num/den e_x e_n e_s e_a" per line, '#' starts a
/// comment. Repeated monomials and zero coefficients are rejected.
MPoly parse_term_table(std::string_view text);
std::string write_term_table(const MPoly& p);

}  // namespace alphaspec

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

#include "alphaspec/mpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

constexpr std::array<Var, kVarCount> kVars = {Var::x, Var::n, Var::s, Var::a};

std::size_t idx(Var v) { return static_cast<std::size_t>(v); }

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents out{};
  for (std::size_t i = 0; i < kVarCount; ++i) {
    const unsigned sum = unsigned{a[i]} + unsigned{b[i]};
    if (sum > 255) throw std::overflow_error("MPoly: exponent overflow");
    out[i] = static_cast<std::uint8_t>(sum);
  }
  return out;
}

bool divides(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kVarCount; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Rational power(const Rational& base, unsigned k) {
  Rational out = 1;
  for (unsigned i = 0; i < k; ++i) out *= base;
  return out;
}

}  // namespace

const char* var_name(Var v) {
  switch (v) {
    case Var::x: return "x";
    case Var::n: return "n";
    case Var::s: return "s";
    case Var::a: return "a";
  }
  return "?";
}

Assignment& Assignment::set(Var v, Rational value) {
  values_[idx(v)] = std::move(value);
  return *this;
}

Assignment Assignment::with(Var v, Rational value) const {
  Assignment out = *this;
  out.set(v, std::move(value));
  return out;
}

std::string Assignment::to_string() const {
  std::string out;
  for (Var v : kVars) {
    if (!values_[idx(v)]) continue;
    if (!out.empty()) out += ", ";
    out += std::string(var_name(v)) + "=" + alphaspec::to_string(*values_[idx(v)]);
  }
  return out;
}

MPoly::MPoly(const Rational& c) {
  if (c != 0) terms_.emplace(Exponents{}, c);
}

MPoly::MPoly(long c) : MPoly(Rational(c)) {}

MPoly MPoly::variable(Var v) {
  Exponents e{};
  e[idx(v)] = 1;
  return monomial(1, e);
}

MPoly MPoly::monomial(const Rational& c, const Exponents& e) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational MPoly::coefficient(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MPoly::degree(Var v) const {
  unsigned d = 0;
  for (const auto& [e, c] : terms_) d = std::max<unsigned>(d, e[idx(v)]);
  return d;
}

MPoly MPoly::coefficient_of(Var v, unsigned power) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    if (e[idx(v)] != power) continue;
    Exponents rest = e;
    rest[idx(v)] = 0;
    out.add_term(rest, c);
  }
  return out;
}

MPoly MPoly::operator-() const {
  MPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly operator*(const MPoly& lhs, const MPoly& rhs) {
  MPoly out;
  for (const auto& [e1, c1] : lhs.terms_)
    for (const auto& [e2, c2] : rhs.terms_) out.add_term(add_exponents(e1, e2), c1 * c2);
  return out;
}

MPoly& MPoly::operator*=(const MPoly& other) { return *this = *this * other; }

MPoly MPoly::pow(unsigned k) const {
  MPoly out = 1;
  for (unsigned i = 0; i < k; ++i) out *= *this;
  return out;
}

Rational MPoly::evaluate(const Assignment& at) const {
  Rational total = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (Var v : kVars) {
      if (e[idx(v)] == 0) continue;
      const auto& value = at.get(v);
      if (!value)
        throw std::invalid_argument(std::string("MPoly::evaluate: unassigned variable ") + var_name(v));
      term *= power(*value, e[idx(v)]);
    }
    total += term;
  }
  return total;
}

MPoly MPoly::evaluate_partial(const Assignment& at) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    Exponents rest = e;
    for (Var v : kVars) {
      const auto& value = at.get(v);
      if (!value || e[idx(v)] == 0) continue;
      coeff *= power(*value, e[idx(v)]);
      rest[idx(v)] = 0;
    }
    out.add_term(rest, coeff);
  }
  return out;
}

MPoly MPoly::substitute(Var v, const MPoly& replacement) const {
  std::vector<MPoly> powers{MPoly(1)};
  MPoly out;
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[idx(v)];
    while (powers.size() <= k) powers.push_back(powers.back() * replacement);
    Exponents rest = e;
    rest[idx(v)] = 0;
    out += monomial(c, rest) * powers[k];
  }
  return out;
}

MPoly MPoly::differentiate(Var v) const {
  MPoly out;
  for (const auto& [e, c] : terms_) {
    const unsigned k = e[idx(v)];
    if (k == 0) continue;
    Exponents lowered = e;
    lowered[idx(v)] = static_cast<std::uint8_t>(k - 1);
    out.add_term(lowered, c * Rational(k));
  }
  return out;
}

DivisionResult divide(const MPoly& dividend, const MPoly& divisor) {
  if (divisor.is_zero()) throw std::domain_error("divide: zero divisor");
  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  DivisionResult out;
  MPoly rest = dividend;
  while (!rest.is_zero()) {
    const auto [e, c] = *rest.terms().rbegin();
    if (divides(lead_e, e)) {
      Exponents q{};
      for (std::size_t i = 0; i < kVarCount; ++i) q[i] = static_cast<std::uint8_t>(e[i] - lead_e[i]);
      Rational coeff = c / lead_c;
      const MPoly step = MPoly::monomial(coeff, q);
      out.quotient += step;
      rest -= step * divisor;
    } else {
      const MPoly lead = MPoly::monomial(c, e);
      out.remainder += lead;
      rest -= lead;
    }
  }
  return out;
}

std::optional<MPoly> MPoly::divide_exact(const MPoly& divisor) const {
  auto result = divide(*this, divisor);
  if (!result.remainder.is_zero()) return std::nullopt;
  return std::move(result.quotient);
}

std::vector<Rational> MPoly::univariate_coefficients(Var v) const {
  std::vector<Rational> out(degree(v) + 1, Rational(0));
  for (const auto& [e, c] : terms_) {
    for (Var other : kVars)
      if (other != v && e[idx(other)] != 0)
        throw std::invalid_argument("univariate_coefficients: polynomial depends on other variables");
    out[e[idx(v)]] = c;
  }
  return out;
}

std::string MPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const bool constant = std::all_of(e.begin(), e.end(), [](std::uint8_t k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << alphaspec::to_string(mag);
      wrote = true;
    }
    for (Var v : kVars) {
      const unsigned k = e[idx(v)];
      if (k == 0) continue;
      os << (wrote ? "*" : "") << var_name(v);
      if (k > 1) os << "^" << k;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

MPoly parse_term_table(std::string_view text) {
  MPoly out;
  MPoly::Terms seen;
  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    ++line_no;
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream is{std::string(line)};
    std::vector<std::string> tokens;
    for (std::string tok; is >> tok;) tokens.push_back(tok);
    const std::string where = "term table line " + std::to_string(line_no);
    if (!tokens.empty()) {
      if (tokens.size() != 1 + kVarCount) throw ParseError(where + ": expected 5 fields", line_start);
      if (tokens[0].find('/') == std::string::npos)
        throw ParseError(where + ": coefficient must be num/den", line_start);
      Rational coeff;
      try {
        coeff = parse_rational(tokens[0]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what(), line_start);
      }
      if (coeff == 0) throw ParseError(where + ": zero coefficient", line_start);
      Exponents e{};
      for (std::size_t i = 0; i < kVarCount; ++i) {
        const std::string& t = tokens[1 + i];
        if (t.empty() || t.size() > 3 || !std::all_of(t.begin(), t.end(), ::isdigit))
          throw ParseError(where + ": bad exponent '" + t + "'", line_start);
        const int k = std::stoi(t);
        if (k > 255) throw ParseError(where + ": exponent too large", line_start);
        e[i] = static_cast<std::uint8_t>(k);
      }
      if (!seen.emplace(e, coeff).second) throw ParseError(where + ": repeated monomial", line_start);
      out += MPoly::monomial(coeff, e);
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  return out;
}

std::string write_term_table(const MPoly& p) {
  std::ostringstream os;
  for (const auto& [e, c] : p.terms()) {
    os << c.get_num().get_str() << "/" << c.get_den().get_str();
    for (std::uint8_t k : e) os << " " << unsigned{k};
    os << "\n";
  }
  return os.str();
}

}  // namespace alphaspec

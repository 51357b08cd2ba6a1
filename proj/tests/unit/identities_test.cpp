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

#include <algorithm>

#include "alphaspec/identities.hpp"
#include "alphaspec/spectral.hpp"
#include "alphaspec/verifier.hpp"

using namespace alphaspec;

namespace {

MPoly cubic_in_a(long c3, long c2, long c1, long c0) {
  const MPoly a = var_a();
  return MPoly(c3) * a.pow(3) + MPoly(c2) * a.pow(2) + MPoly(c1) * a + MPoly(c0);
}

Assignment point(long n, long s, const Rational& a) {
  return Assignment().set(Var::n, Rational(n)).set(Var::s, Rational(s)).set(Var::a, a);
}

}  // namespace

TEST_CASE("every fixture loads") {
  const auto names = fixture_names();
  CHECK(names.size() == 31);
  CHECK(std::is_sorted(names.begin(), names.end()));
  for (const auto& name : names) CHECK_FALSE(load_fixture(name).is_zero());
  CHECK_THROWS_AS(load_fixture("no_such_fixture"), std::out_of_range);
}

TEST_CASE("symbolic quotients agree with the numeric ones") {
  for (long n : {18, 20, 26})
    for (long s = 2; 2 * s + 4 <= n; ++s)
      for (const Rational& a : {Rational(0), Rational(1, 8), Rational(1, 2), Rational(3, 4)}) {
        const QuotientMatrix q = quotient(alpha_matrix(build_family(separator_spec(n, s)), to_double(a)),
                                          separator_partition(n, s));
        const SymbolicMatrix exact = separator_quotient_symbolic().evaluate_partial(point(n, s, a));
        for (std::size_t i = 0; i < 4; ++i)
          for (std::size_t j = 0; j < 4; ++j)
            CHECK(q.entries(i, j) == doctest::Approx(to_double(exact(i, j).evaluate({}))).epsilon(1e-12));
      }
}

TEST_CASE("characteristic polynomial of a symbolic matrix") {
  const MPoly n = var_n();
  const SymbolicMatrix m{{n, 1}, {1, n}};
  // (x - n)^2 - 1
  CHECK(charpoly(m) == (var_x() - n).pow(2) - 1);
  CHECK_THROWS(SymbolicMatrix(9));
}

TEST_CASE("all identities hold exactly") {
  for (const auto& check : verify_all_identities()) {
    CAPTURE(check.name);
    CHECK(check.holds);
    CHECK(check.mismatches.empty());
  }
}

TEST_CASE("the difference divides by s - 1") {
  const DifferenceCubic d = derive_difference_cubic();
  REQUIRE(d.cubic.has_value());
  CHECK(d.remainder.is_zero());
  CHECK(d.cubic->degree(Var::x) == 3);
  const MPoly diff = charpoly(separator_quotient_symbolic()) - charpoly(extremal_quotient_symbolic());
  CHECK((var_s() - 1) * *d.cubic == diff);
}

TEST_CASE("boundary value at s = 6") {
  const MPoly cubic = *derive_difference_cubic().cubic;
  const MPoly h6 = cubic.substitute(Var::x, var_n() - 5)
                       .substitute(Var::n, 2 * var_s() + 6)
                       .evaluate_partial(Assignment().set(Var::s, 6));
  CHECK(h6 == cubic_in_a(-338, 1382, -1810, 626));
}

TEST_CASE("audit flags exactly the three inconsistent displays") {
  std::vector<std::string> failing;
  for (const auto& check : audit_displayed_steps())
    if (!check.holds) failing.push_back(check.name);
  CHECK(failing == std::vector<std::string>{"slope_at_n_minus_5", "boundary_in_s_slope_at_s6", "boundary_at_18_s4"});

  // Values below come from an independent computer-algebra derivation.
  const MPoly cubic = *derive_difference_cubic().cubic;
  const MPoly slope = cubic.differentiate(Var::x).substitute(Var::x, var_n() - 5);
  CHECK(slope.coefficient({0, 0, 0, 0}) == 101);
  const MPoly g18 = cubic.substitute(Var::x, var_n() - 5).evaluate_partial(Assignment().set(Var::n, 18).set(Var::s, 4));
  CHECK(g18 == cubic_in_a(-318, 1682, -2860, 1244));
  const MPoly h = cubic.substitute(Var::x, var_n() - 5).substitute(Var::n, 2 * var_s() + 6);
  CHECK(h.differentiate(Var::s).evaluate_partial(Assignment().set(Var::s, 6)) == cubic_in_a(-154, 678, -941, 369));
}

TEST_CASE("sign grids") {
  GridRegion region;
  region.axes = {{Var::a, 0, 1, Rational(1, 4)}, {Var::n, 1, 3, 1}};
  const SignGridReport r = sign_grid(var_n() - 2 * var_a(), region);
  CHECK(r.points == 15);
  CHECK(r.min_value == -1);
  CHECK(r.argmin == Assignment().set(Var::a, 1).set(Var::n, 1));
  CHECK(r.non_positive_count == 4);  // (1/2,1), (3/4,1), (1,1), (1,2)
  CHECK_FALSE(r.all_positive());
  region.constraints.emplace_back([](const Assignment& at) { return *at.get(Var::n) >= 3; });
  const SignGridReport c = sign_grid(var_n() - 2 * var_a(), region);
  CHECK(c.points == 5);
  CHECK(c.all_positive());
  region.constraints.emplace_back([](const Assignment&) { return false; });
  CHECK_THROWS(sign_grid(var_n(), region));
}

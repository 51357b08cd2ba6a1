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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace alphaspec {

/// Arbitrary-precision rational; always kept canonical (den > 0, reduced).
using Rational = mpq_class;

/// num/den in canonical form. Prefer this to the two-argument mpq_class
/// constructor, which leaves common factors in place.
Rational make_rational(long num, long den);

/// Accepts "p/q", integers and plain decimals ("0.25", "-1.5"). Throws
/// std::invalid_argument on anything else or a zero denominator.
Rational parse_rational(std::string_view text);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);
double to_double(const Rational& r);

}  // namespace alphaspec

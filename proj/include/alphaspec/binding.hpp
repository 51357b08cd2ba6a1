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

#include "alphaspec/graph.hpp"
#include "alphaspec/rational.hpp"

namespace alphaspec {

/// min |N(X)|/|X| over nonempty X with N(X) != V, and the minimizer with the
/// smallest bitmask among all minimizers.
struct BindingResult {
  Rational value;
  VertexSet witness;
};

inline constexpr std::size_t kBindingScanCap = 24;

/// Exhaustive scan over all 2^n - 1 nonempty subsets. For a loop-free graph
/// X = {v} is always admissible, so the minimum exists whenever n >= 1.
BindingResult binding_number(const Graph& g);

/// bind(G) >= 1, exiting on the first admissible X with |N(X)| < |X|.
bool is_one_binding(const Graph& g);

}  // namespace alphaspec

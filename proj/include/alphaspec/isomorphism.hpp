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
#include <optional>
#include <vector>

#include "alphaspec/graph.hpp"

namespace alphaspec {

/// Stable colouring from iterated degree refinement, computed on both graphs
/// with a shared colour table so classes are comparable across them.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Graph& g,
                                                                             const Graph& h);

/// A bijection phi with uv in E(g) <=> phi(u)phi(v) in E(h), or nullopt.
/// Backtracks over refined colour classes, smallest classes first.
std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace alphaspec

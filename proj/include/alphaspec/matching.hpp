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

/// A matching stored as a partial involution: mate(v) == u iff mate(u) == v.
class Matching {
 public:
  static constexpr std::size_t kUnmatched = static_cast<std::size_t>(-1);

  Matching() = default;
  explicit Matching(std::size_t n) : mate_(n, kUnmatched) {}
  /// Validates the involution and that matched pairs are edges of `host`.
  Matching(const Graph& host, std::vector<std::size_t> mate);

  std::size_t order() const { return mate_.size(); }
  std::size_t mate(std::size_t v) const { return mate_.at(v); }
  bool is_matched(std::size_t v) const { return mate_.at(v) != kUnmatched; }
  std::size_t size() const;
  bool is_perfect() const { return 2 * size() == order(); }
  std::vector<Edge> pairs() const;
  const std::vector<std::size_t>& mates() const { return mate_; }

 private:
  std::vector<std::size_t> mate_;
};

/// Edmonds' blossom algorithm. Free vertices are grown in ascending order and
/// neighbours scanned ascending, so the result is reproducible.
Matching max_matching(const Graph& g);
bool has_perfect_matching(const Graph& g);

struct TutteWitness {
  VertexSet s;
  std::size_t odd_count = 0;
};

inline constexpr std::size_t kTutteScanCap = 24;

/// Exhaustive scan of all S in increasing bitmask order; returns the first S
/// with o(G-S) > |S|. Throws CapacityError above kTutteScanCap vertices.
std::optional<TutteWitness> tutte_witness(const Graph& g);

}  // namespace alphaspec

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
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace alphaspec {

/// A subset of the vertex range [0, universe). Stored as 64-bit words, so a
/// universe of at most 64 vertices is a single machine word and can be
/// exchanged with the bitmask fast paths via `mask()` / `from_mask()`.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<std::size_t> members);

  static VertexSet from_mask(std::size_t universe, std::uint64_t mask);
  static VertexSet from_members(std::size_t universe,
                                std::span<const std::size_t> members);
  static VertexSet full(std::size_t universe);

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t v) const;
  void insert(std::size_t v);
  void erase(std::size_t v);
  std::size_t count() const;
  bool empty() const;

  /// Only valid when universe() <= 64.
  std::uint64_t mask() const;
  std::vector<std::size_t> members() const;
  VertexSet complement() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(w * 64 + static_cast<std::size_t>(b));
        bits &= bits - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  bool operator==(const VertexSet& other) const = default;

 private:
  void check_same_universe(const VertexSet& other) const;

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Simple undirected graph. Immutable once constructed; every constructor
/// validates symmetry and loop-freeness.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on `n` vertices.
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const Edge> edges);
  static Graph from_edges(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return n_; }
  std::size_t size() const;
  bool adjacent(std::size_t u, std::size_t v) const;
  const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).count(); }
  std::size_t min_degree() const;
  std::vector<std::size_t> degrees() const;
  std::vector<Edge> edges() const;

  /// Row masks for the n <= 64 fast paths.
  std::vector<std::uint64_t> adjacency_masks() const;

  Graph with_edge(std::size_t u, std::size_t v) const;
  Graph without_edge(std::size_t u, std::size_t v) const;
  /// Vertex v of *this becomes vertex perm[v] of the result.
  Graph relabeled(std::span<const std::size_t> perm) const;

  bool operator==(const Graph& other) const = default;

 private:
  void link(std::size_t u, std::size_t v);
  void check_invariants() const;

  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

/// K_s joined with the disjoint union of cliques K_{parts[0]}, ..., K_{parts[q-1]}.
/// Parts are kept sorted non-decreasing.
struct JoinFamilySpec {
  std::size_t apex = 0;
  std::vector<std::size_t> parts;

  /// Sorts `parts`; rejects zero-sized parts.
  static JoinFamilySpec make(std::size_t apex, std::vector<std::size_t> parts);

  std::size_t order() const;
  std::string to_string() const;
  bool operator==(const JoinFamilySpec&) const = default;
  auto operator<=>(const JoinFamilySpec&) const = default;
};

Graph complete(std::size_t k);
Graph disjoint_union(const Graph& g1, const Graph& g2);
Graph join(const Graph& g1, const Graph& g2);

/// Vertex layout: apex vertices are 0..apex-1, then each part's clique in
/// spec order. Spectral partitions index into this layout.
Graph build_family(const JoinFamilySpec& spec);
/// First vertex index of each part in the build_family layout.
std::vector<std::size_t> part_offsets(const JoinFamilySpec& spec);

VertexSet neighborhood(const Graph& g, const VertexSet& x);
/// Induced subgraph on the complement of `s`; remaining vertices keep their
/// relative order.
Graph remove_vertices(const Graph& g, const VertexSet& s);
/// Ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::size_t odd_components(const Graph& g, const VertexSet& s);
/// The empty graph counts as connected.
bool is_connected(const Graph& g);

}  // namespace alphaspec

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

#include "alphaspec/matching.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

#include "alphaspec/errors.hpp"

namespace alphaspec {

Matching::Matching(const Graph& host, std::vector<std::size_t> mate) : mate_(std::move(mate)) {
  if (mate_.size() != host.order()) throw std::invalid_argument("Matching: size mismatch");
  for (std::size_t v = 0; v < mate_.size(); ++v) {
    const std::size_t u = mate_[v];
    if (u == kUnmatched) continue;
    if (u >= mate_.size() || mate_[u] != v) throw std::invalid_argument("Matching: not an involution");
    if (!host.adjacent(u, v)) throw std::invalid_argument("Matching: pair is not an edge");
  }
}

std::size_t Matching::size() const {
  std::size_t matched = 0;
  for (std::size_t m : mate_)
    if (m != kUnmatched) ++matched;
  return matched / 2;
}

std::vector<Edge> Matching::pairs() const {
  std::vector<Edge> out;
  for (std::size_t v = 0; v < mate_.size(); ++v)
    if (mate_[v] != kUnmatched && v < mate_[v]) out.emplace_back(v, mate_[v]);
  return out;
}

namespace {

constexpr std::size_t kNone = Matching::kUnmatched;

// Alternating-tree search with blossom contraction tracked through `base`.
class BlossomSearch {
 public:
  explicit BlossomSearch(const Graph& g)
      : n_(g.order()), adj_(n_), mate_(n_, kNone), parent_(n_), base_(n_),
        used_(n_), blossom_(n_) {
    for (std::size_t v = 0; v < n_; ++v) adj_[v] = g.neighbors(v).members();
  }

  std::vector<std::size_t> run() {
    for (std::size_t v = 0; v < n_; ++v) {
      if (mate_[v] != kNone) continue;
      std::size_t end = find_augmenting_path(v);
      while (end != kNone) {
        const std::size_t pv = parent_[end];
        const std::size_t ppv = mate_[pv];
        mate_[end] = pv;
        mate_[pv] = end;
        end = ppv;
      }
    }
    return mate_;
  }

 private:
  std::size_t lowest_common_base(std::size_t a, std::size_t b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (mate_[a] == kNone) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(std::size_t v, std::size_t b, std::size_t child) {
    while (base_[v] != b) {
      blossom_[base_[v]] = blossom_[base_[mate_[v]]] = 1;
      parent_[v] = child;
      child = mate_[v];
      v = parent_[mate_[v]];
    }
  }

  std::size_t find_augmenting_path(std::size_t root) {
    std::fill(used_.begin(), used_.end(), 0);
    std::fill(parent_.begin(), parent_.end(), kNone);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t v = queue[head];
      for (std::size_t to : adj_[v]) {
        if (base_[v] == base_[to] || mate_[v] == to) continue;
        if (to == root || (mate_[to] != kNone && parent_[mate_[to]] != kNone)) {
          const std::size_t b = lowest_common_base(v, to);
          std::fill(blossom_.begin(), blossom_.end(), 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (std::size_t i = 0; i < n_; ++i) {
            if (!blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!used_[i]) {
              used_[i] = 1;
              queue.push_back(i);
            }
          }
        } else if (parent_[to] == kNone) {
          parent_[to] = v;
          if (mate_[to] == kNone) return to;
          used_[mate_[to]] = 1;
          queue.push_back(mate_[to]);
        }
      }
    }
    return kNone;
  }

  std::size_t n_;
  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::size_t> mate_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> base_;
  std::vector<char> used_;
  std::vector<char> blossom_;
};

// Odd component count of G - S on bitmask adjacency.
std::size_t odd_components_masked(const std::vector<std::uint64_t>& adj, std::uint64_t all,
                                  std::uint64_t removed) {
  std::uint64_t left = all & ~removed;
  std::size_t odd = 0;
  while (left != 0) {
    std::uint64_t comp = left & (~left + 1);
    std::uint64_t frontier = comp;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f != 0; f &= f - 1) next |= adj[std::countr_zero(f)];
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    if (std::popcount(comp) % 2 == 1) ++odd;
    left &= ~comp;
  }
  return odd;
}

}  // namespace

Matching max_matching(const Graph& g) {
  return Matching(g, BlossomSearch(g).run());
}

bool has_perfect_matching(const Graph& g) {
  if (g.order() % 2 == 1) return false;
  return max_matching(g).is_perfect();
}

std::optional<TutteWitness> tutte_witness(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kTutteScanCap) throw CapacityError("tutte_witness", n, kTutteScanCap);
  const auto adj = g.adjacency_masks();
  const std::uint64_t all = n == 0 ? 0 : (n == 64 ? ~0ULL : (1ULL << n) - 1);
  for (std::uint64_t s = 0; s <= all; ++s) {
    const std::size_t odd = odd_components_masked(adj, all, s);
    if (odd > static_cast<std::size_t>(std::popcount(s)))
      return TutteWitness{VertexSet::from_mask(n, s), odd};
    if (s == all) break;
  }
  return std::nullopt;
}

}  // namespace alphaspec

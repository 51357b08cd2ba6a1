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

#include "alphaspec/binding.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

// N(X) for every X via two half-tables: N(X) = low[X & lo_mask] | high[X >> split].
class NeighborhoodTable {
 public:
  explicit NeighborhoodTable(const Graph& g) : split_(g.order() / 2) {
    const auto adj = g.adjacency_masks();
    low_ = build(adj, 0, split_);
    high_ = build(adj, split_, g.order());
  }

  std::uint64_t operator()(std::uint64_t x) const {
    return low_[x & ((1ULL << split_) - 1)] | high_[x >> split_];
  }

 private:
  static std::vector<std::uint64_t> build(const std::vector<std::uint64_t>& adj,
                                          std::size_t from, std::size_t to) {
    std::vector<std::uint64_t> table(std::size_t{1} << (to - from), 0);
    for (std::size_t x = 1; x < table.size(); ++x) {
      const int low_bit = std::countr_zero(x);
      table[x] = table[x & (x - 1)] | adj[from + static_cast<std::size_t>(low_bit)];
    }
    return table;
  }

  std::size_t split_;
  std::vector<std::uint64_t> low_;
  std::vector<std::uint64_t> high_;
};

void check_capacity(const Graph& g, const char* what) {
  if (g.order() > kBindingScanCap) throw CapacityError(what, g.order(), kBindingScanCap);
  if (g.order() == 0) throw std::invalid_argument(std::string(what) + ": empty graph");
}

}  // namespace

BindingResult binding_number(const Graph& g) {
  check_capacity(g, "binding_number");
  const std::size_t n = g.order();
  const std::uint64_t all = (1ULL << n) - 1;
  const NeighborhoodTable nbr(g);

  std::uint64_t best_x = 0;
  std::uint64_t best_num = 0;
  std::uint64_t best_den = 1;
  for (std::uint64_t x = 1; x <= all; ++x) {
    const std::uint64_t nx = nbr(x);
    if (nx == all) continue;
    const auto num = static_cast<std::uint64_t>(std::popcount(nx));
    const auto den = static_cast<std::uint64_t>(std::popcount(x));
    // Strict comparison keeps the smallest bitmask among ties.
    if (best_x == 0 || num * best_den < best_num * den) {
      best_x = x;
      best_num = num;
      best_den = den;
    }
  }
  Rational value(static_cast<unsigned long>(best_num), static_cast<unsigned long>(best_den));
  value.canonicalize();
  return BindingResult{value, VertexSet::from_mask(n, best_x)};
}

bool is_one_binding(const Graph& g) {
  check_capacity(g, "is_one_binding");
  const std::size_t n = g.order();
  const std::uint64_t all = (1ULL << n) - 1;
  const NeighborhoodTable nbr(g);
  for (std::uint64_t x = 1; x <= all; ++x) {
    const std::uint64_t nx = nbr(x);
    if (nx != all && std::popcount(nx) < std::popcount(x)) return false;
  }
  return true;
}

}  // namespace alphaspec

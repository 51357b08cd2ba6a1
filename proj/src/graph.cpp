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

#include "alphaspec/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace alphaspec {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe,
                     std::initializer_list<std::size_t> members)
    : VertexSet(universe) {
  for (std::size_t v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64) throw std::invalid_argument("from_mask: universe > 64");
  if (universe < 64 && (mask >> universe) != 0)
    throw std::out_of_range("from_mask: bits outside universe");
  VertexSet out(universe);
  if (!out.words_.empty()) out.words_[0] = mask;
  return out;
}

VertexSet VertexSet::from_members(std::size_t universe,
                                  std::span<const std::size_t> members) {
  VertexSet out(universe);
  for (std::size_t v : members) out.insert(v);
  return out;
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet out(universe);
  for (std::size_t w = 0; w < out.words_.size(); ++w) out.words_[w] = ~0ULL;
  if (universe % 64 != 0) out.words_.back() = (1ULL << (universe % 64)) - 1;
  return out;
}

bool VertexSet::contains(std::size_t v) const {
  if (v >= universe_) return false;
  return (words_[v / 64] >> (v % 64)) & 1ULL;
}

void VertexSet::insert(std::size_t v) {
  if (v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  words_[v / 64] |= 1ULL << (v % 64);
}

void VertexSet::erase(std::size_t v) {
  if (v >= universe_) throw std::out_of_range("VertexSet: vertex out of range");
  words_[v / 64] &= ~(1ULL << (v % 64));
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::uint64_t VertexSet::mask() const {
  if (universe_ > 64) throw std::logic_error("VertexSet::mask: universe > 64");
  return words_.empty() ? 0 : words_[0];
}

std::vector<std::size_t> VertexSet::members() const {
  std::vector<std::size_t> out;
  out.reserve(count());
  for_each([&](std::size_t v) { out.push_back(v); });
  return out;
}

VertexSet VertexSet::complement() const {
  VertexSet out = full(universe_);
  out -= *this;
  return out;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (other.universe_ != universe_)
    throw std::invalid_argument("VertexSet: universe mismatch");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

Graph::Graph(std::size_t n) : n_(n), adj_(n, VertexSet(n)) {}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.link(u, v);
  g.check_invariants();
  return g;
}

Graph Graph::from_edges(std::size_t n, std::initializer_list<Edge> edges) {
  return from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::link(std::size_t u, std::size_t v) {
  if (u >= n_ || v >= n_) throw std::out_of_range("Graph: edge endpoint out of range");
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  adj_[u].insert(v);
  adj_[v].insert(u);
}

void Graph::check_invariants() const {
  for (std::size_t i = 0; i < n_; ++i) {
    if (adj_[i].universe() != n_) throw std::logic_error("Graph: row universe mismatch");
    if (adj_[i].contains(i)) throw std::logic_error("Graph: loop at vertex " + std::to_string(i));
    adj_[i].for_each([&](std::size_t j) {
      if (!adj_[j].contains(i)) throw std::logic_error("Graph: asymmetric adjacency");
    });
  }
}

std::size_t Graph::size() const {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return u < n_ && adj_[u].contains(v);
}

std::size_t Graph::min_degree() const {
  std::size_t best = n_ == 0 ? 0 : n_;
  for (std::size_t v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = degree(v);
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (std::size_t u = 0; u < n_; ++u)
    adj_[u].for_each([&](std::size_t v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
  if (n_ > 64) throw std::logic_error("adjacency_masks: n > 64");
  std::vector<std::uint64_t> out(n_);
  for (std::size_t v = 0; v < n_; ++v) out[v] = adj_[v].mask();
  return out;
}

Graph Graph::with_edge(std::size_t u, std::size_t v) const {
  Graph g = *this;
  g.link(u, v);
  return g;
}

Graph Graph::without_edge(std::size_t u, std::size_t v) const {
  if (u >= n_ || v >= n_) throw std::out_of_range("Graph: edge endpoint out of range");
  Graph g = *this;
  g.adj_[u].erase(v);
  g.adj_[v].erase(u);
  return g;
}

Graph Graph::relabeled(std::span<const std::size_t> perm) const {
  if (perm.size() != n_) throw std::invalid_argument("relabeled: permutation size");
  VertexSet seen(n_);
  for (std::size_t p : perm) {
    if (p >= n_ || seen.contains(p)) throw std::invalid_argument("relabeled: not a permutation");
    seen.insert(p);
  }
  Graph g(n_);
  for (const auto& [u, v] : edges()) g.link(perm[u], perm[v]);
  return g;
}

JoinFamilySpec JoinFamilySpec::make(std::size_t apex, std::vector<std::size_t> parts) {
  if (std::find(parts.begin(), parts.end(), 0) != parts.end())
    throw std::invalid_argument("JoinFamilySpec: parts must be positive");
  std::sort(parts.begin(), parts.end());
  return JoinFamilySpec{apex, std::move(parts)};
}

std::size_t JoinFamilySpec::order() const {
  return apex + std::accumulate(parts.begin(), parts.end(), std::size_t{0});
}

std::string JoinFamilySpec::to_string() const {
  std::ostringstream os;
  os << "K" << apex << " v (";
  for (std::size_t i = 0; i < parts.size(); ++i) os << (i ? " u K" : "K") << parts[i];
  os << ")";
  return os.str();
}

Graph complete(std::size_t k) {
  std::vector<Edge> edges;
  edges.reserve(k * (k > 0 ? k - 1 : 0) / 2);
  for (std::size_t u = 0; u < k; ++u)
    for (std::size_t v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(k, edges);
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const std::size_t offset = g1.order();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph::from_edges(g1.order() + g2.order(), edges);
}

Graph join(const Graph& g1, const Graph& g2) {
  std::vector<Edge> edges = g1.edges();
  const std::size_t offset = g1.order();
  for (const auto& [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
  for (std::size_t u = 0; u < g1.order(); ++u)
    for (std::size_t v = 0; v < g2.order(); ++v) edges.emplace_back(u, v + offset);
  return Graph::from_edges(g1.order() + g2.order(), edges);
}

std::vector<std::size_t> part_offsets(const JoinFamilySpec& spec) {
  std::vector<std::size_t> out;
  std::size_t at = spec.apex;
  for (std::size_t p : spec.parts) {
    out.push_back(at);
    at += p;
  }
  return out;
}

Graph build_family(const JoinFamilySpec& spec) {
  if (!std::is_sorted(spec.parts.begin(), spec.parts.end()))
    throw std::invalid_argument("build_family: parts not in canonical order");
  Graph body;
  for (std::size_t p : spec.parts) body = disjoint_union(body, complete(p));
  return join(complete(spec.apex), body);
}

VertexSet neighborhood(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.order()) throw std::invalid_argument("neighborhood: universe mismatch");
  VertexSet out(g.order());
  x.for_each([&](std::size_t v) { out |= g.neighbors(v); });
  return out;
}

Graph remove_vertices(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("remove_vertices: universe mismatch");
  std::vector<std::size_t> index(g.order(), g.order());
  std::size_t kept = 0;
  for (std::size_t v = 0; v < g.order(); ++v)
    if (!s.contains(v)) index[v] = kept++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (index[u] < kept && index[v] < kept) edges.emplace_back(index[u], index[v]);
  return Graph::from_edges(kept, edges);
}

std::vector<VertexSet> components(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<VertexSet> out;
  VertexSet seen(n);
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen.contains(root)) continue;
    VertexSet comp(n);
    stack.push_back(root);
    seen.insert(root);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      comp.insert(v);
      g.neighbors(v).for_each([&](std::size_t w) {
        if (!seen.contains(w)) {
          seen.insert(w);
          stack.push_back(w);
        }
      });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::size_t odd_components(const Graph& g, const VertexSet& s) {
  std::size_t odd = 0;
  for (const auto& c : components(remove_vertices(g, s)))
    if (c.count() % 2 == 1) ++odd;
  return odd;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

}  // namespace alphaspec

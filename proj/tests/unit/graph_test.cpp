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
#include <random>

#include "alphaspec/graph.hpp"
#include "support.hpp"

using namespace alphaspec;

TEST_CASE("vertex sets across word boundaries") {
  VertexSet s(130, {0, 63, 64, 129});
  CHECK(s.count() == 4);
  CHECK(s.contains(64));
  CHECK_FALSE(s.contains(65));
  CHECK(s.members() == std::vector<std::size_t>{0, 63, 64, 129});
  CHECK(s.complement().count() == 126);
  s.erase(63);
  CHECK(s.count() == 3);
  CHECK_THROWS(s.insert(130));
  CHECK_THROWS(VertexSet(70).mask());
  CHECK(VertexSet::from_mask(5, 0b10110).members() == std::vector<std::size_t>{1, 2, 4});
  CHECK_THROWS(VertexSet::from_mask(3, 0b1000));
  VertexSet a(8, {1, 2});
  CHECK_THROWS(a |= VertexSet(9));
}

TEST_CASE("graph construction validates its input") {
  CHECK_THROWS(Graph::from_edges(3, {{0, 0}}));
  CHECK_THROWS(Graph::from_edges(3, {{0, 3}}));
  const Graph g = Graph::from_edges(4, {{0, 1}, {1, 0}, {1, 2}});
  CHECK(g.size() == 2);
  CHECK(g.degrees() == std::vector<std::size_t>{1, 2, 1, 0});
  CHECK(g.min_degree() == 0);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.with_edge(2, 3).size() == 3);
  CHECK(g.without_edge(0, 1).size() == 1);
  CHECK(Graph(0).order() == 0);
}

TEST_CASE("join and union sizes") {
  const Graph k3 = complete(3);
  const Graph k4 = complete(4);
  CHECK(k4.size() == 6);
  const Graph u = disjoint_union(k3, k4);
  CHECK(u.order() == 7);
  CHECK(u.size() == 9);
  CHECK(components(u).size() == 2);
  const Graph j = join(k3, Graph(2));
  CHECK(j.size() == 3 + 6);
  CHECK(is_connected(j));
}

TEST_CASE("family graphs have the expected edge count") {
  auto expected = [](const JoinFamilySpec& spec) {
    std::size_t m = spec.apex * (spec.apex - (spec.apex ? 1 : 0)) / 2;
    const std::size_t rest = spec.order() - spec.apex;
    m += spec.apex * rest;
    for (std::size_t p : spec.parts) m += p * (p - 1) / 2;
    return m;
  };
  for (std::size_t n : {10, 18, 20, 24}) {
    const auto spec = JoinFamilySpec::make(1, {1, 3, n - 5});
    const Graph g = build_family(spec);
    CHECK(g.order() == n);
    CHECK(g.size() == expected(spec));
    CHECK(g.degree(0) == n - 1);
  }
  const auto spec = JoinFamilySpec::make(3, {3, 1, 5, 1, 1});
  CHECK(spec.parts == std::vector<std::size_t>{1, 1, 1, 3, 5});
  CHECK(build_family(spec).size() == expected(spec));
  CHECK(part_offsets(spec) == std::vector<std::size_t>{3, 4, 5, 6, 9});
  CHECK_THROWS(JoinFamilySpec::make(1, {0, 2}));
}

TEST_CASE("components, odd components and removal") {
  const Graph star = build_family(JoinFamilySpec::make(1, {1, 1, 1}));
  CHECK(odd_components(star, VertexSet(4, {0})) == 3);
  CHECK(odd_components(star, VertexSet(4)) == 0);
  const Graph rest = remove_vertices(star, VertexSet(4, {0}));
  CHECK(rest.order() == 3);
  CHECK(rest.size() == 0);
  CHECK(neighborhood(star, VertexSet(4, {1, 2})).members() == std::vector<std::size_t>{0});
  CHECK(is_connected(Graph(0)));
  CHECK_FALSE(is_connected(Graph(2)));
  const auto comps = components(Graph::from_edges(5, {{3, 4}, {1, 2}}));
  REQUIRE(comps.size() == 3);
  CHECK(comps[0].members() == std::vector<std::size_t>{0});
  CHECK(comps[1].members() == std::vector<std::size_t>{1, 2});
}

TEST_CASE("relabeling preserves degrees and is undone by the inverse") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = testing::random_graph(rng, n, 0.3);
    const auto perm = testing::random_permutation(rng, n);
    const Graph h = g.relabeled(perm);
    std::vector<std::size_t> inverse(n);
    for (std::size_t v = 0; v < n; ++v) inverse[perm[v]] = v;
    CHECK(h.relabeled(inverse) == g);
    for (std::size_t v = 0; v < n; ++v) CHECK(h.degree(perm[v]) == g.degree(v));
  }
  const std::vector<std::size_t> bad{0, 0};
  CHECK_THROWS(Graph(2).relabeled(bad));
}

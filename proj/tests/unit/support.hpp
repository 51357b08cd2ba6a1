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

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "alphaspec/graph.hpp"
#include "json.hpp"

namespace testing {

inline std::string fixture_path(const std::string& name) { return std::string(ALPHASPEC_TEST_FIXTURES) + "/" + name; }

inline std::string read_file(const std::string& name) {
  std::ifstream in(fixture_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Reference values produced by tests/fixtures/gen_oracles.py.
inline const nlohmann::json& oracles() {
  static const nlohmann::json j = nlohmann::json::parse(read_file("oracles.json"));
  return j;
}

inline alphaspec::Graph graph_from_json(std::size_t n, const nlohmann::json& edges) {
  std::vector<alphaspec::Edge> list;
  for (const auto& e : edges) list.emplace_back(e[0].get<std::size_t>(), e[1].get<std::size_t>());
  return alphaspec::Graph::from_edges(n, list);
}

inline alphaspec::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<alphaspec::Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return alphaspec::Graph::from_edges(n, edges);
}

inline std::vector<std::size_t> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace testing

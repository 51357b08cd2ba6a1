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

#include "alphaspec/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace alphaspec {

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine_colors(const Graph& g,
                                                                             const Graph& h) {
  std::vector<std::size_t> cg = g.degrees();
  std::vector<std::size_t> ch = h.degrees();
  std::size_t classes = 0;
  for (;;) {
    using Signature = std::pair<std::size_t, std::vector<std::size_t>>;
    std::map<Signature, std::size_t> table;
    auto signature = [](const Graph& gr, const std::vector<std::size_t>& colors, std::size_t v) {
      std::vector<std::size_t> around;
      gr.neighbors(v).for_each([&](std::size_t w) { around.push_back(colors[w]); });
      std::sort(around.begin(), around.end());
      return Signature{colors[v], std::move(around)};
    };
    std::vector<Signature> sg, sh;
    for (std::size_t v = 0; v < g.order(); ++v) sg.push_back(signature(g, cg, v));
    for (std::size_t v = 0; v < h.order(); ++v) sh.push_back(signature(h, ch, v));
    for (const auto& sig : sg) table.emplace(sig, 0);
    for (const auto& sig : sh) table.emplace(sig, 0);
    std::size_t next = 0;
    for (auto& [sig, id] : table) id = next++;
    for (std::size_t v = 0; v < g.order(); ++v) cg[v] = table[sg[v]];
    for (std::size_t v = 0; v < h.order(); ++v) ch[v] = table[sh[v]];
    if (next == classes) break;
    classes = next;
  }
  return {cg, ch};
}

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h, std::vector<std::size_t> cg, std::vector<std::size_t> ch)
      : g_(g), h_(h), cg_(std::move(cg)), ch_(std::move(ch)),
        map_(g.order(), kFree), used_(h.order(), false) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    std::vector<std::size_t> class_size(g.order() + h.order() + 1, 0);
    for (std::size_t c : cg_) ++class_size[c];
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t u, std::size_t v) {
      return class_size[cg_[u]] < class_size[cg_[v]];
    });
  }

  std::optional<std::vector<std::size_t>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool consistent(std::size_t u, std::size_t w) const {
    for (std::size_t k = 0; k < g_.order(); ++k) {
      if (map_[k] == kFree) continue;
      if (g_.adjacent(u, k) != h_.adjacent(w, map_[k])) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t u = order_[depth];
    for (std::size_t w = 0; w < h_.order(); ++w) {
      if (used_[w] || ch_[w] != cg_[u] || !consistent(u, w)) continue;
      map_[u] = w;
      used_[w] = true;
      if (extend(depth + 1)) return true;
      map_[u] = kFree;
      used_[w] = false;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::vector<std::size_t> cg_;
  std::vector<std::size_t> ch_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
  std::vector<std::size_t> order_;
};

}  // namespace

std::optional<std::vector<std::size_t>> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto [cg, ch] = refine_colors(g, h);
  std::vector<std::size_t> hist_g = cg, hist_h = ch;
  std::sort(hist_g.begin(), hist_g.end());
  std::sort(hist_h.begin(), hist_h.end());
  if (hist_g != hist_h) return std::nullopt;
  return Matcher(g, h, std::move(cg), std::move(ch)).run();
}

}  // namespace alphaspec

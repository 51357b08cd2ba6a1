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

#include "alphaspec/graph6.hpp"

#include <cstdint>
#include <vector>

#include "alphaspec/errors.hpp"

namespace alphaspec {

namespace {

constexpr int kOffset = 63;
constexpr std::size_t kMaxShortOrder = 62;
constexpr std::size_t kMaxMediumOrder = 258047;

int sextet(std::string_view text, std::size_t at) {
  const auto c = static_cast<unsigned char>(text[at]);
  if (c < kOffset || c > kOffset + 63) throw ParseError("graph6: byte out of range", at);
  return c - kOffset;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6: 8-byte size header not supported", 1);
    if (text.size() < 4) throw ParseError("graph6: truncated size header", text.size());
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text, i));
    if (n <= kMaxShortOrder) throw ParseError("graph6: non-canonical size header", 0);
    pos = 4;
  } else {
    n = static_cast<std::size_t>(sextet(text, 0));
    pos = 1;
  }

  const std::size_t bits = n * (n > 0 ? n - 1 : 0) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes) throw ParseError("graph6: truncated bit stream", text.size());
  if (text.size() > pos + bytes) throw ParseError("graph6: trailing bytes", pos + bytes);

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = sextet(text, pos + k / 6);
      if ((chunk >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = pos + bytes - 1;
    const int chunk = sextet(text, last);
    if ((chunk & ((1 << (6 - bits % 6)) - 1)) != 0)
      throw ParseError("graph6: nonzero padding bits", last);
  }
  return Graph::from_edges(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= kMaxShortOrder) {
    out.push_back(static_cast<char>(kOffset + n));
  } else if (n <= kMaxMediumOrder) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(kOffset + ((n >> shift) & 63)));
  } else {
    throw CapacityError("write_graph6: order too large", n, kMaxMediumOrder);
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kOffset + chunk));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kOffset + (chunk << (6 - filled))));
  return out;
}

}  // namespace alphaspec

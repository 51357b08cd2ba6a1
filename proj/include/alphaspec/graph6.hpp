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

#include <string>
#include <string_view>

#include "alphaspec/graph.hpp"

namespace alphaspec {

/// Parses one graph6 record (no trailing newline). Throws ParseError with the
/// offending byte offset on a bad header, an out-of-range byte, a truncated
/// or overlong bit stream, or nonzero padding bits.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 encoding. Uses the 4-byte size header for 63 <= n <= 258047.
std::string write_graph6(const Graph& g);

}  // namespace alphaspec

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

namespace alphaspec::detail {

struct EmbeddedFixture {
  const char* name;
  const char* text;
};

// Defined in a file generated at build time from data/fixtures/*.poly.
extern const EmbeddedFixture kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;

}  // namespace alphaspec::detail

// Copyright 2026 The rsgraph Authors.
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

#include "rsgraph/graph.hpp"

namespace rsgraph {

// The .rsg text format:
//
//   rsg <n> <t> <r>
//   <u> <v> <m>        one line per edge, 0 <= u < v < n, 0 <= m < t
//
// Tokens are separated by spaces or tabs and every line ends in '\n'.
// Canonical documents list records sorted by (m, u, v).

// Builds the graph from the records and the matchings from the m labels.
// Does not verify the decomposition. Throws ParseError with a 1-based line
// number on a malformed header or record, an out-of-range vertex or
// matching index, or a duplicated edge.
MatchingDecomposition parse_rsg(std::string_view text);

// Canonical document for dec.
std::string emit_rsg(const MatchingDecomposition& dec);

}  // namespace rsgraph

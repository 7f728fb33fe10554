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

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "rsgraph/graph.hpp"

namespace rsgraph {

enum class Verdict { kSat, kUnsat, kIndeterminate };
std::string_view to_string(Verdict verdict);

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  std::chrono::milliseconds max_time{60'000};

  // Defaults, overridden by RSG_DEFAULT_BUDGET ("NODES" or "NODES:SECONDS").
  static SearchBudget from_environment();
  // Throws ParameterError on malformed text.
  static SearchBudget parse(std::string_view text);
};

struct SearchOptions {
  SearchBudget budget;
  // Refute up front when r exceeds max_r(n, t).
  bool max_r_shortcut = true;
  // Worker threads over top-level branches; 1 runs inline.
  unsigned jobs = 1;
};

struct SearchOutcome {
  Verdict verdict = Verdict::kIndeterminate;
  // Present iff verdict is SAT; always verified before being returned.
  std::optional<MatchingDecomposition> certificate;
  std::uint64_t nodes_explored = 0;
  std::chrono::milliseconds wall_time{0};
  bool shortcut_fired = false;
  // max_t_on_graph: the largest t found (optimal when verdict is SAT).
  std::size_t best_t = 0;
  std::string note;
};

// Decides whether an (r, t)-RS graph on n vertices exists by searching over
// decompositions directly: the graph is the union of the matchings. M_1 is
// fixed to {(0,1), (2,3), ...}, matchings are ordered by their smallest
// edge, and edges within a matching increase, which loses no solution up to
// relabeling. Throws ParameterError when 2r > n, n > 32 or t > 64.
SearchOutcome exists_rs(std::size_t n, std::size_t r, std::size_t t,
                        const SearchOptions& options = {});

// Largest number of pairwise edge-disjoint matchings of size r, each
// induced in g. With exact_cover, decides whether the matchings can
// partition E(g) (t = |E|/r); throws ParameterError if r does not divide
// |E|. The certificate decomposes the spanning subgraph covered by the
// chosen matchings.
SearchOutcome max_t_on_graph(const Graph& g, std::size_t r, bool exact_cover,
                             const SearchOptions& options = {});

}  // namespace rsgraph

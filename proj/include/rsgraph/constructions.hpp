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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rsgraph/ap_free_set.hpp"
#include "rsgraph/graph.hpp"

namespace rsgraph {

// Constructions refuse to build graphs with more vertices than this unless
// a larger budget is passed explicitly.
inline constexpr std::size_t kDefaultVertexBudget = 8192;

// KG(2k+1, k) with matching M_i = {(A, B) : A ∪ B = [2k+1] \ {i}}.
// Vertices are the k-subsets of {1..2k+1} in colexicographic order, which
// is the increasing order of their bitmasks. Yields n = C(2k+1, k),
// t = 2k+1 and r = C(2k, k)/2.
MatchingDecomposition kneser_rs(unsigned k,
                                std::size_t vertex_budget = kDefaultVertexBudget);

// Vertex of kneser_rs(k) as a bitmask over {1..2k+1} (bit i-1 for element i).
std::vector<std::uint64_t> kneser_vertex_sets(unsigned k);

// The k-cube on bit-vectors labeled by integer value. M_i (i < k) pairs an
// even-parity v having bit i clear with v + e_i; M_{k+i} does the same for
// odd-parity v. With augmented (k even) two antipodal matchings follow:
// pairs (u, ~u) with both even, then both odd. n = 2^k, r = n/4 and
// t = 2k, or 2k + 2 augmented.
MatchingDecomposition hypercube_rs(unsigned k, bool augmented,
                                   std::size_t vertex_budget = kDefaultVertexBudget);

// copies vertex-disjoint translates; copy c occupies [c*n, (c+1)*n). Output
// matching i is the union of the translates of input matching i.
MatchingDecomposition disjoint_union(const MatchingDecomposition& dec,
                                     std::size_t copies);

// G x K2 with (v, 0) -> v and (v, 1) -> v + n. Each (u, v) in M_i becomes
// (u, v + n) and (v, u + n) in the output M_i.
MatchingDecomposition double_cover(const MatchingDecomposition& dec);

// Bipartite Cayley-type graph over Z_N: parts X = {0..N-1} and
// Y = {N..2N-1}, x ~ N + y iff (y - x) mod N is in S. Matching M_z for
// z in Z_N is {(z - 2a, N + (z - a)) : a in S}. n = 2N, t = N, r = |S|.
// Requires N odd, S nonempty and max(S) <= (N - 1) / 3.
MatchingDecomposition cayley_rs(std::uint64_t modulus,
                                std::span<const std::uint64_t> differences);

enum class Family {
  kKneser,
  kHypercube,
  kHypercubeAugmented,
  kDisjointUnion,
  kDoubleCover,
  kCayleyAP,
};

std::string_view to_string(Family family);
std::optional<Family> parse_family(std::string_view name);

// Parameters for one construction. Wrapper families (disjoint-union,
// double-cover) apply to the base family described by the same record.
struct ConstructionSpec {
  Family family = Family::kKneser;
  unsigned k = 2;
  std::size_t copies = 1;
  std::uint64_t modulus = 0;
  APMethod ap_method = APMethod::kGreedyBase3;
  // Limit for the generated AP-free set; defaults to (N - 1) / 3.
  std::optional<std::uint64_t> limit;
  // Explicit difference set; overrides ap_method/limit when present.
  std::optional<std::vector<std::uint64_t>> set;
  Family base = Family::kKneser;
  std::size_t vertex_budget = kDefaultVertexBudget;
};

// Dispatches on spec.family. Throws ParameterError for inconsistent specs.
MatchingDecomposition construct(const ConstructionSpec& spec);

}  // namespace rsgraph

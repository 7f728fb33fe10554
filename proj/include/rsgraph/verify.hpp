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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsgraph/graph.hpp"

namespace rsgraph {

// Invariant names used in violations and JSON reports.
namespace invariant {
inline constexpr const char* kEdgeNotInGraph = "edge-not-in-graph";
inline constexpr const char* kNotEdgeDisjoint = "not-edge-disjoint";
inline constexpr const char* kNotCovering = "not-covering";
inline constexpr const char* kSizeMismatch = "size-mismatch";
inline constexpr const char* kNotMatching = "not-a-matching";
inline constexpr const char* kNotInduced = "not-induced";
inline constexpr const char* kDegreeSum = "degree-sum";
inline constexpr const char* kIntersection = "intersection";
}  // namespace invariant

struct InducedMatchingResult {
  enum class Status { kPass, kNotMatching, kNotInduced };
  Status status = Status::kPass;
  // kNotMatching: the shared endpoint. kNotInduced: the lexicographically
  // smallest pair (a, b), a < b, of V(m) joined by an edge of g outside m.
  std::vector<Vertex> witness;

  bool pass() const { return status == Status::kPass; }
};

// Throws MalformedInputError if some edge of m is not an edge of g.
InducedMatchingResult induced_matching_check(const Graph& g,
                                             std::span<const Edge> m);

struct Violation {
  std::string invariant;
  // Offending matching indices (0-based) when the invariant is per-matching
  // or per-pair.
  std::optional<std::size_t> matching;
  std::optional<std::size_t> other_matching;
  // Vertices of the lexicographically first offender.
  std::vector<Vertex> witness;
  // Number of offenders of this kind.
  std::size_t count = 0;
  std::string detail;
};

struct VerificationStats {
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t r = 0;
  std::size_t num_edges = 0;
  // degree_histogram[d] = number of vertices of degree d.
  std::vector<std::size_t> degree_histogram;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t max_degree_sum = 0;
  // Largest |V_i ∩ V_j| over i < j; zero when t < 2.
  std::size_t max_intersection = 0;
  std::size_t isolated_vertices = 0;
};

struct VerificationReport {
  std::vector<Violation> violations;  // sorted by (invariant, matching, ...)
  VerificationStats stats;

  bool pass() const { return violations.empty(); }
  const Violation* find(std::string_view invariant_name) const;
};

// Checks the partition, size, matching and inducedness invariants plus the
// edge-local consequences d_u + d_v <= t + 1 and |V_i ∩ V_j| <= r. All
// violated invariants are reported. Throws MalformedInputError only for
// structurally broken input (self-loop or out-of-range vertex in a matching).
VerificationReport verify_decomposition(const MatchingDecomposition& dec);

struct DecompositionStats {
  RSParameters params;
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  std::size_t max_degree_sum = 0;
  std::size_t max_intersection = 0;
  std::size_t isolated_vertices = 0;
};

// Throws PreconditionError unless dec verifies.
DecompositionStats decomposition_stats(const MatchingDecomposition& dec);

// Throws PreconditionError carrying the first violation unless dec verifies.
void require_verified(const MatchingDecomposition& dec);

}  // namespace rsgraph

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
#include <string>
#include <vector>

#include "rsgraph/graph.hpp"
#include "rsgraph/rational.hpp"

namespace rsgraph {

enum class AssertionStatus { kPass, kFail, kNotApplicable };
std::string_view to_string(AssertionStatus status);

struct AuditAssertion {
  std::string name;
  AssertionStatus status = AssertionStatus::kPass;
  std::string detail;
};

struct LayerRow {
  std::size_t distance = 0;
  std::uint64_t size = 0;
  // C(s, i) with s = floor(t/8).
  std::uint64_t binomial_bound = 0;
  // Whether the row is asserted or informational only.
  bool asserted = false;
  // Sharpened bound with s' = E1/n when s' is an integer; zero otherwise.
  std::uint64_t sharpened_bound = 0;
};

// Audit of the degree-sum expansion argument for decompositions with
// matchings of size n/4. Class E_i counts edges whose endpoint degrees sum
// to t + i.
struct AuditReport {
  // Parameters of the audited (bipartite) decomposition.
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  bool double_covered = false;
  bool quarter = false;  // 4r == n

  std::uint64_t e1 = 0;
  std::uint64_t e0 = 0;
  // e_neg[j-1] = E_{-j} for j = 1..t.
  std::vector<std::uint64_t> e_neg;
  // Edges with degree sum above t + 1; zero on every verified input.
  std::uint64_t e_over = 0;
  std::uint64_t num_edges = 0;

  // Sum over edges of (d_u + d_v - t), and sum_v d_v^2 - t |E|.
  std::int64_t excess_by_edges = 0;
  std::int64_t excess_by_squares = 0;

  Rational s{0};        // (E1 + E0) / n
  Rational s_prime{0};  // E1 / n

  std::uint64_t h_edges = 0;  // E1 + E0
  std::size_t f_size = 0;
  std::size_t f_min_degree = 0;
  std::size_t bfs_pairs_checked = 0;
  std::size_t bfs_violations = 0;

  // Layer sizes |N_i| from the smallest vertex of F.
  std::size_t layer_root = 0;
  std::vector<LayerRow> layers;

  std::vector<AuditAssertion> assertions;

  bool pass() const;
};

// Requires a verified decomposition (PreconditionError otherwise). A
// non-bipartite input is replaced by its bipartite double cover first.
AuditReport expansion_audit(const MatchingDecomposition& dec);

}  // namespace rsgraph

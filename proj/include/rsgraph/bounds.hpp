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
#include <string>
#include <vector>

#include "rsgraph/graph.hpp"
#include "rsgraph/rational.hpp"

namespace rsgraph {

// Largest r permitted for an (r, t)-RS graph on n vertices by the
// Plotkin-style double count: (n/4)(1 + 1/t) for odd t and
// (n/4)(1 + 1/(t+1)) for even t. Exact; throws ParameterError if n or t
// is zero.
Rational max_r(std::uint64_t n, std::uint64_t t);

enum class Regime { kAboveQuarter, kExactlyQuarter, kBelowQuarter };
std::string_view to_string(Regime regime);

struct Advisory {
  std::string statement;
  std::string source;
};

struct BoundVerdict {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::uint64_t t = 0;
  Regime regime = Regime::kBelowQuarter;
  bool feasible = true;
  // max_r(n, t); present in the above-quarter regime with t >= 1.
  std::optional<Rational> hard_bound;
  // r == max_r(n, t).
  bool tight = false;
  // At r = n/4: the explicit bound t <= 8(log2 n + 1), as the largest
  // integer t it allows.
  std::optional<std::uint64_t> max_t_quarter;
  // Below quarter with c > 1/5: epsilon = c - 1/5 and K = 100 / epsilon.
  std::optional<Rational> epsilon;
  std::optional<Rational> proof_constant_k;
  std::vector<Advisory> advisory;
  std::string reason;
};

// Throws ParameterError when 2r > n.
BoundVerdict feasibility_verdict(std::uint64_t n, std::uint64_t r,
                                 std::uint64_t t);

// Largest integer t with t <= 8(log2 n + 1), computed exactly.
std::uint64_t quarter_t_limit(std::uint64_t n);

struct DistanceCertificate {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  // Minimum Hamming distance over all pairs of {v_0 = 0, v_1, ..., v_t}.
  std::size_t min_distance = 0;
  std::size_t min_pair_i = 0;
  std::size_t min_pair_j = 0;
  bool distance_ok = true;  // min_distance >= 2r
  // Left side 2r * C(t+1, 2).
  std::uint64_t lhs = 0;
  // Sum of pairwise distances, computed pair by pair.
  std::uint64_t pairwise_sum = 0;
  // Same sum computed per coordinate as sum_i a_i * b_i.
  std::uint64_t coordinate_sum = 0;
  // n(t+1)^2/4 for odd t, n t (t+2)/4 for even t.
  std::uint64_t rhs = 0;
  std::int64_t lower_slack = 0;  // pairwise_sum - lhs
  std::int64_t upper_slack = 0;  // rhs - coordinate_sum
  bool max_r_binding = false;    // r > n/4

  bool pass() const {
    return distance_ok && pairwise_sum == coordinate_sum && lower_slack >= 0 &&
           upper_slack >= 0;
  }
};

// Requires a verified decomposition (so every |V_i| = 2r); throws
// PreconditionError otherwise.
DistanceCertificate distance_certificate(const MatchingDecomposition& dec);

}  // namespace rsgraph

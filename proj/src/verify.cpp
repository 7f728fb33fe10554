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

#include "rsgraph/verify.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>

#include "rsgraph/error.hpp"

namespace rsgraph {
namespace {

constexpr std::uint32_t kNoPartner = std::numeric_limits<std::uint32_t>::max();

// Matching and inducedness test against g. Edges of m need not be edges of
// g; the caller decides whether that is an error.
InducedMatchingResult check_matching(const Graph& g, std::span<const Edge> m,
                                     std::vector<std::uint32_t>& partner) {
  InducedMatchingResult result;
  std::vector<Vertex> touched;
  std::optional<Vertex> shared;
  for (const Edge& e : m) {
    for (Vertex x : {e.u, e.v}) {
      if (partner[x] != kNoPartner) {
        if (!shared || x < *shared) shared = x;
      } else {
        touched.push_back(x);
      }
    }
    if (partner[e.u] == kNoPartner) partner[e.u] = e.v;
    if (partner[e.v] == kNoPartner) partner[e.v] = e.u;
  }
  if (shared) {
    result.status = InducedMatchingResult::Status::kNotMatching;
    result.witness = {*shared};
  } else {
    std::sort(touched.begin(), touched.end());
    for (Vertex a : touched) {
      for (Vertex b : g.neighbors(a)) {
        if (b <= a || partner[b] == kNoPartner || partner[a] == b) continue;
        result.status = InducedMatchingResult::Status::kNotInduced;
        result.witness = {a, b};
        break;
      }
      if (!result.pass()) break;
    }
  }
  for (Vertex x : touched) partner[x] = kNoPartner;
  return result;
}

void check_structure(const MatchingDecomposition& dec) {
  const std::size_t n = dec.n();
  for (std::size_t i = 0; i < dec.t(); ++i) {
    for (const Edge& e : dec.matchings()[i]) {
      if (e.u == e.v || e.v >= n) {
        throw MalformedInputError(
            "matching " + std::to_string(i) + " has invalid edge (" +
            std::to_string(e.u) + "," + std::to_string(e.v) + ") for n=" +
            std::to_string(n));
      }
    }
  }
}

using Bitset = std::vector<std::uint64_t>;

std::size_t intersection_size(const Bitset& a, const Bitset& b) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

// Accumulates offenders of one invariant, keeping the smallest key.
struct Collector {
  explicit Collector(std::string invariant_name) : name(std::move(invariant_name)) {}

  std::string name;
  std::size_t count = 0;
  std::optional<std::tuple<std::size_t, std::size_t, std::vector<Vertex>>> best;
  Violation first;

  void add(Violation v, std::size_t key_major, std::size_t key_minor) {
    ++count;
    auto key = std::make_tuple(key_major, key_minor, v.witness);
    if (!best || key < *best) {
      best = std::move(key);
      first = std::move(v);
    }
  }

  void flush(std::vector<Violation>& out) {
    if (count == 0) return;
    first.invariant = name;
    first.count = count;
    out.push_back(std::move(first));
  }
};

}  // namespace

InducedMatchingResult induced_matching_check(const Graph& g,
                                             std::span<const Edge> m) {
  for (const Edge& e : m) {
    if (e.v >= g.num_vertices() || e.u == e.v || !g.has_edge(e)) {
      throw MalformedInputError("edge (" + std::to_string(e.u) + "," +
                                std::to_string(e.v) + ") is not in the graph");
    }
  }
  std::vector<std::uint32_t> partner(g.num_vertices(), kNoPartner);
  return check_matching(g, m, partner);
}

const Violation* VerificationReport::find(std::string_view name) const {
  for (const Violation& v : violations) {
    if (v.invariant == name) return &v;
  }
  return nullptr;
}

VerificationReport verify_decomposition(const MatchingDecomposition& dec) {
  check_structure(dec);
  const Graph& g = dec.graph();
  const std::size_t n = dec.n();
  const std::size_t t = dec.t();
  const std::size_t r = dec.r();

  Collector not_in_graph{invariant::kEdgeNotInGraph};
  Collector not_disjoint{invariant::kNotEdgeDisjoint};
  Collector not_covering{invariant::kNotCovering};
  Collector size_mismatch{invariant::kSizeMismatch};
  Collector not_matching{invariant::kNotMatching};
  Collector not_induced{invariant::kNotInduced};
  Collector degree_sum{invariant::kDegreeSum};
  Collector intersection{invariant::kIntersection};

  // owner[e] = first matching that lists graph edge e.
  constexpr std::size_t kUnowned = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> owner(g.num_edges(), kUnowned);
  std::vector<std::uint32_t> partner(n, kNoPartner);
  const std::size_t words = (n + 63) / 64;
  std::vector<Bitset> vertex_sets(t, Bitset(words, 0));

  for (std::size_t i = 0; i < t; ++i) {
    const Matching& m = dec.matchings()[i];
    if (m.size() != r) {
      Violation v;
      v.matching = i;
      v.detail = "matching has " + std::to_string(m.size()) +
                 " edges, declared r=" + std::to_string(r);
      size_mismatch.add(std::move(v), i, 0);
    }
    for (const Edge& e : m) {
      vertex_sets[i][e.u / 64] |= std::uint64_t{1} << (e.u % 64);
      vertex_sets[i][e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      std::size_t idx = g.edge_index(e);
      if (idx == g.num_edges()) {
        Violation v;
        v.matching = i;
        v.witness = {e.u, e.v};
        not_in_graph.add(std::move(v), i, 0);
        continue;
      }
      if (owner[idx] == kUnowned) {
        owner[idx] = i;
      } else {
        Violation v;
        v.matching = owner[idx];
        v.other_matching = i;
        v.witness = {e.u, e.v};
        not_disjoint.add(std::move(v), e.u, e.v);
      }
    }
    InducedMatchingResult res = check_matching(g, m, partner);
    if (res.status == InducedMatchingResult::Status::kNotMatching) {
      Violation v;
      v.matching = i;
      v.witness = res.witness;
      not_matching.add(std::move(v), i, 0);
    } else if (res.status == InducedMatchingResult::Status::kNotInduced) {
      Violation v;
      v.matching = i;
      v.witness = res.witness;
      not_induced.add(std::move(v), i, 0);
    }
  }

  VerificationStats stats;
  stats.n = n;
  stats.t = t;
  stats.r = r;
  stats.num_edges = g.num_edges();
  stats.min_degree = n == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (Vertex x = 0; x < n; ++x) {
    std::size_t d = g.degree(x);
    if (stats.degree_histogram.size() <= d) stats.degree_histogram.resize(d + 1, 0);
    ++stats.degree_histogram[d];
    stats.min_degree = std::min(stats.min_degree, d);
    stats.max_degree = std::max(stats.max_degree, d);
    if (d == 0) ++stats.isolated_vertices;
  }

  for (std::size_t idx = 0; idx < g.num_edges(); ++idx) {
    const Edge& e = g.edges()[idx];
    if (owner[idx] == kUnowned) {
      Violation v;
      v.witness = {e.u, e.v};
      not_covering.add(std::move(v), e.u, e.v);
    }
    std::size_t sum = g.degree(e.u) + g.degree(e.v);
    stats.max_degree_sum = std::max(stats.max_degree_sum, sum);
    if (sum > t + 1) {
      Violation v;
      v.witness = {e.u, e.v};
      v.detail = "d_u + d_v = " + std::to_string(sum) + " > t + 1 = " +
                 std::to_string(t + 1);
      degree_sum.add(std::move(v), e.u, e.v);
    }
  }

  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = i + 1; j < t; ++j) {
      std::size_t common = intersection_size(vertex_sets[i], vertex_sets[j]);
      stats.max_intersection = std::max(stats.max_intersection, common);
      if (common > r) {
        Violation v;
        v.matching = i;
        v.other_matching = j;
        for (Vertex x = 0; x < n; ++x) {
          std::uint64_t bit = std::uint64_t{1} << (x % 64);
          if (vertex_sets[i][x / 64] & vertex_sets[j][x / 64] & bit) {
            v.witness.push_back(x);
          }
        }
        v.detail = "|V_i ∩ V_j| = " + std::to_string(common) + " > r = " +
                   std::to_string(r);
        intersection.add(std::move(v), i, j);
      }
    }
  }

  VerificationReport report;
  report.stats = std::move(stats);
  for (Collector* c : {&degree_sum, &not_in_graph, &intersection, &not_matching,
                       &not_covering, &not_disjoint, &not_induced,
                       &size_mismatch}) {
    c->flush(report.violations);
  }
  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& a, const Violation& b) {
              return std::tie(a.invariant, a.matching, a.other_matching,
                              a.witness) < std::tie(b.invariant, b.matching,
                                                    b.other_matching, b.witness);
            });
  return report;
}

void require_verified(const MatchingDecomposition& dec) {
  VerificationReport report = verify_decomposition(dec);
  if (!report.pass()) {
    const Violation& v = report.violations.front();
    throw PreconditionError("decomposition does not verify: " + v.invariant +
                            (v.detail.empty() ? "" : " (" + v.detail + ")"));
  }
}

DecompositionStats decomposition_stats(const MatchingDecomposition& dec) {
  VerificationReport report = verify_decomposition(dec);
  if (!report.pass()) {
    throw PreconditionError("decomposition_stats requires a verified "
                            "decomposition; first violation: " +
                            report.violations.front().invariant);
  }
  DecompositionStats out;
  out.params = RSParameters::of(dec.n(), dec.r(), dec.t());
  out.min_degree = report.stats.min_degree;
  out.max_degree = report.stats.max_degree;
  out.max_degree_sum = report.stats.max_degree_sum;
  out.max_intersection = report.stats.max_intersection;
  out.isolated_vertices = report.stats.isolated_vertices;
  return out;
}

}  // namespace rsgraph

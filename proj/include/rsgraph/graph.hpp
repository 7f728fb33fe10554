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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rsgraph/rational.hpp"

namespace rsgraph {

using Vertex = std::uint32_t;

// Unordered pair stored with u < v. Ordering is lexicographic on (u, v).
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  // Normalizes the endpoint order; does not reject u == v (Graph does).
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

using Matching = std::vector<Edge>;

// Undirected simple graph on vertices 0..n-1 with O(1) adjacency queries.
class Graph {
 public:
  Graph() = default;

  // Throws MalformedInputError on self-loops, out-of-range endpoints or
  // duplicate edges.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }

  // Sorted lexicographically.
  std::span<const Edge> edges() const { return edges_; }

  bool adjacent(Vertex a, Vertex b) const {
    return (rows_[a * words_ + b / 64] >> (b % 64)) & 1U;
  }
  bool has_edge(const Edge& e) const { return adjacent(e.u, e.v); }

  std::size_t degree(Vertex v) const { return neighbors_[v].size(); }
  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return neighbors_[v]; }

  // Index of e in edges(), or num_edges() when absent.
  std::size_t edge_index(const Edge& e) const;

  // Two-coloring by BFS; empty when the graph has an odd cycle.
  std::vector<int> bipartition() const;
  bool is_bipartite() const { return n_ == 0 || !bipartition().empty(); }

 private:
  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// An ordered list of edge-lists claimed to partition the edges of a graph
// into induced matchings of a common size r. Nothing is checked here; the
// claim is certified by verify_decomposition.
class MatchingDecomposition {
 public:
  MatchingDecomposition() = default;
  MatchingDecomposition(Graph graph, std::vector<Matching> matchings,
                        std::size_t r)
      : graph_(std::move(graph)), matchings_(std::move(matchings)), r_(r) {}

  const Graph& graph() const { return graph_; }
  std::span<const Matching> matchings() const { return matchings_; }
  std::size_t r() const { return r_; }
  std::size_t t() const { return matchings_.size(); }
  std::size_t n() const { return graph_.num_vertices(); }

 private:
  Graph graph_;
  std::vector<Matching> matchings_;
  std::size_t r_ = 0;
};

struct RSParameters {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  Rational c{0};  // r / n, zero for the empty vertex set

  static RSParameters of(std::size_t n, std::size_t r, std::size_t t);
  friend bool operator==(const RSParameters&, const RSParameters&) = default;
};

// Distinct vertices covered by the edges of m, sorted. Fewer than 2|m|
// exactly when m is not a matching.
std::vector<Vertex> matching_vertices(std::span<const Edge> m);

}  // namespace rsgraph

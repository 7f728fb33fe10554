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

#include "rsgraph/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "rsgraph/error.hpp"

namespace rsgraph {
namespace {

std::string edge_text(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges)
    : n_(n), words_((n + 63) / 64), edges_(std::move(edges)) {
  for (const Edge& e : edges_) {
    if (e.u == e.v) throw MalformedInputError("self-loop at " + edge_text(e));
    if (e.v >= n_) {
      throw MalformedInputError("edge " + edge_text(e) + " out of range for n=" +
                                std::to_string(n_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw MalformedInputError("duplicate edge " + edge_text(*dup));
  }
  rows_.assign(n_ * words_, 0);
  neighbors_.resize(n_);
  for (const Edge& e : edges_) {
    rows_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    rows_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    neighbors_[e.u].push_back(e.v);
    neighbors_[e.v].push_back(e.u);
  }
  for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
}

std::size_t Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return edges_.size();
  return static_cast<std::size_t>(it - edges_.begin());
}

std::vector<int> Graph::bipartition() const {
  std::vector<int> color(n_, -1);
  std::queue<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    queue.push(s);
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop();
      for (Vertex b : neighbors_[a]) {
        if (color[b] == -1) {
          color[b] = 1 - color[a];
          queue.push(b);
        } else if (color[b] == color[a]) {
          return {};
        }
      }
    }
  }
  return color;
}

RSParameters RSParameters::of(std::size_t n, std::size_t r, std::size_t t) {
  RSParameters p;
  p.n = n;
  p.r = r;
  p.t = t;
  p.c = n == 0 ? Rational(0)
               : Rational(static_cast<std::int64_t>(r),
                          static_cast<std::int64_t>(n));
  return p;
}

std::vector<Vertex> matching_vertices(std::span<const Edge> m) {
  std::vector<Vertex> out;
  out.reserve(2 * m.size());
  for (const Edge& e : m) {
    out.push_back(e.u);
    out.push_back(e.v);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace rsgraph

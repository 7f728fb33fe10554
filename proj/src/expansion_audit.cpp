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

#include "rsgraph/expansion_audit.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "rsgraph/constructions.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {
namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    if (c > std::numeric_limits<std::uint64_t>::max() / (n - k + i)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    c = c * (n - k + i) / i;
  }
  return c;
}

AuditAssertion make(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? AssertionStatus::kPass : AssertionStatus::kFail,
          std::move(detail)};
}

AuditAssertion not_applicable(std::string name, std::string detail) {
  return {std::move(name), AssertionStatus::kNotApplicable, std::move(detail)};
}

// BFS distances inside the subgraph given by adjacency lists.
std::vector<std::size_t> bfs(const std::vector<std::vector<Vertex>>& adj,
                             Vertex root) {
  std::vector<std::size_t> dist(adj.size(), kUnreached);
  std::queue<Vertex> queue;
  dist[root] = 0;
  queue.push(root);
  while (!queue.empty()) {
    Vertex a = queue.front();
    queue.pop();
    for (Vertex b : adj[a]) {
      if (dist[b] != kUnreached) continue;
      dist[b] = dist[a] + 1;
      queue.push(b);
    }
  }
  return dist;
}

}  // namespace

std::string_view to_string(AssertionStatus status) {
  switch (status) {
    case AssertionStatus::kPass: return "pass";
    case AssertionStatus::kFail: return "fail";
    case AssertionStatus::kNotApplicable: return "not-applicable";
  }
  return "unknown";
}

bool AuditReport::pass() const {
  return std::none_of(assertions.begin(), assertions.end(), [](const auto& a) {
    return a.status == AssertionStatus::kFail;
  });
}

AuditReport expansion_audit(const MatchingDecomposition& input) {
  require_verified(input);
  AuditReport report;
  MatchingDecomposition covered;
  const MatchingDecomposition* dec = &input;
  if (!input.graph().is_bipartite()) {
    covered = double_cover(input);
    dec = &covered;
    report.double_covered = true;
  }
  const Graph& g = dec->graph();
  const std::size_t n = dec->n();
  const std::size_t t = dec->t();
  report.n = n;
  report.r = dec->r();
  report.t = t;
  report.quarter = 4 * report.r == n;
  report.num_edges = g.num_edges();
  report.e_neg.assign(t, 0);

  // A_v: the matchings incident to v.
  const std::size_t words = std::max<std::size_t>(1, (t + 63) / 64);
  std::vector<std::vector<std::uint64_t>> incident(
      n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < t; ++i) {
    for (const Edge& e : dec->matchings()[i]) {
      incident[e.u][i / 64] |= std::uint64_t{1} << (i % 64);
      incident[e.v][i / 64] |= std::uint64_t{1} << (i % 64);
    }
  }
  auto count = [&](Vertex v) {
    std::size_t c = 0;
    for (std::uint64_t w : incident[v]) c += std::popcount(w);
    return c;
  };
  std::size_t incidence_mismatch = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (count(v) != g.degree(v)) ++incidence_mismatch;
  }

  std::int64_t square_sum = 0;
  for (Vertex v = 0; v < n; ++v) {
    auto d = static_cast<std::int64_t>(g.degree(v));
    square_sum += d * d;
  }
  const auto tt = static_cast<std::int64_t>(t);
  for (const Edge& e : g.edges()) {
    auto sum = static_cast<std::int64_t>(g.degree(e.u) + g.degree(e.v));
    std::int64_t cls = sum - tt;
    report.excess_by_edges += cls;
    if (cls > 1) {
      ++report.e_over;
    } else if (cls == 1) {
      ++report.e1;
    } else if (cls == 0) {
      ++report.e0;
    } else {
      auto j = static_cast<std::size_t>(-cls);
      if (report.e_neg.size() < j) report.e_neg.resize(j, 0);
      ++report.e_neg[j - 1];
    }
  }
  report.excess_by_squares =
      square_sum - tt * static_cast<std::int64_t>(g.num_edges());
  report.h_edges = report.e1 + report.e0;
  if (n > 0) {
    report.s = Rational(static_cast<std::int64_t>(report.h_edges),
                        static_cast<std::int64_t>(n));
    report.s_prime = Rational(static_cast<std::int64_t>(report.e1),
                              static_cast<std::int64_t>(n));
  }

  std::uint64_t class_total = report.e1 + report.e0 + report.e_over;
  for (std::uint64_t c : report.e_neg) class_total += c;

  report.assertions.push_back(make(
      "edge-classes-partition", class_total == report.num_edges,
      "E1 + E0 + sum E_neg + E_over = " + std::to_string(class_total) +
          ", |E| = " + std::to_string(report.num_edges)));
  report.assertions.push_back(
      make("a:no-class-above-one", report.e_over == 0,
           std::to_string(report.e_over) + " edges with d_u + d_v > t + 1"));
  report.assertions.push_back(make(
      "incidence-equals-degree", incidence_mismatch == 0,
      std::to_string(incidence_mismatch) + " vertices with |A_v| != d_v"));
  report.assertions.push_back(make(
      "excess-identity", report.excess_by_edges == report.excess_by_squares,
      "sum_E (d_u + d_v - t) = " + std::to_string(report.excess_by_edges) +
          ", sum_V d^2 - t|E| = " + std::to_string(report.excess_by_squares)));

  if (report.quarter) {
    report.assertions.push_back(
        make("cauchy-schwarz", report.excess_by_edges >= 0,
             "sum_E (d_u + d_v - t) = " + std::to_string(report.excess_by_edges) +
                 " >= 0"));
    std::uint64_t lhs = 4 * (2 * report.e1 + report.e0);
    std::uint64_t rhs = static_cast<std::uint64_t>(n) * t;
    report.assertions.push_back(
        make("b:2E1+E0>=nt/4", lhs >= rhs,
             "2E1 + E0 = " + std::to_string(2 * report.e1 + report.e0) +
                 ", nt/4 = " + to_string(Rational(static_cast<std::int64_t>(rhs), 4))));
  } else {
    report.assertions.push_back(not_applicable("cauchy-schwarz", "r != n/4"));
    report.assertions.push_back(not_applicable("b:2E1+E0>=nt/4", "r != n/4"));
  }

  // H keeps edges with d_u + d_v >= t; F strips vertices of H-degree < t/8.
  std::vector<std::vector<Vertex>> h_adj(n);
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) + g.degree(e.v) >= t) {
      h_adj[e.u].push_back(e.v);
      h_adj[e.v].push_back(e.u);
    }
  }
  std::vector<std::size_t> h_degree(n);
  std::vector<bool> alive(n, true);
  std::queue<Vertex> doomed;
  auto below_threshold = [&](std::size_t d) { return 8 * d < t; };
  for (Vertex v = 0; v < n; ++v) {
    h_degree[v] = h_adj[v].size();
    if (below_threshold(h_degree[v])) {
      alive[v] = false;
      doomed.push(v);
    }
  }
  while (!doomed.empty()) {
    Vertex v = doomed.front();
    doomed.pop();
    for (Vertex w : h_adj[v]) {
      if (!alive[w]) continue;
      if (below_threshold(--h_degree[w])) {
        alive[w] = false;
        doomed.push(w);
      }
    }
  }
  std::vector<std::vector<Vertex>> f_adj(n);
  std::vector<Vertex> f_vertices;
  for (Vertex v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    f_vertices.push_back(v);
    for (Vertex w : h_adj[v]) {
      if (alive[w]) f_adj[v].push_back(w);
    }
  }
  report.f_size = f_vertices.size();
  report.f_min_degree = f_vertices.empty() ? 0 : std::numeric_limits<std::size_t>::max();
  for (Vertex v : f_vertices) {
    report.f_min_degree = std::min(report.f_min_degree, f_adj[v].size());
  }
  if (report.quarter && t > 0) {
    report.assertions.push_back(
        make("c:F-nonempty", !f_vertices.empty(),
             "F has " + std::to_string(report.f_size) +
                 " vertices, min degree " + std::to_string(report.f_min_degree) +
                 " >= t/8"));
  } else {
    report.assertions.push_back(
        not_applicable("c:F-nonempty", report.quarter ? "t = 0" : "r != n/4"));
  }

  // Distance claims and layer growth, from every root in F.
  const std::size_t s = t / 8;
  const std::size_t asserted_layers = s / 2 + 1;
  std::size_t layer_failures = 0;
  std::vector<std::uint64_t> sharpened;
  if (report.s_prime.denominator() == 1 && report.s_prime.numerator() > 0) {
    auto sp = static_cast<std::uint64_t>(report.s_prime.numerator());
    for (std::uint64_t i = 0; 2 * i <= 2 * sp; ++i) {
      sharpened.push_back(binomial(sp, i) * binomial(sp - 1, i));
      sharpened.push_back(binomial(sp, i + 1) * binomial(sp - 1, i));
    }
  }
  for (Vertex root : f_vertices) {
    std::vector<std::size_t> dist = bfs(f_adj, root);
    std::vector<std::uint64_t> layer_sizes;
    for (Vertex u = 0; u < n; ++u) {
      if (dist[u] == kUnreached) continue;
      const std::size_t k = dist[u];
      if (layer_sizes.size() <= k) layer_sizes.resize(k + 1, 0);
      ++layer_sizes[k];
      std::size_t overlap = 0;
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = (k % 2 == 1) ? (incident[u][w] & incident[root][w])
                                          : (incident[u][w] & ~incident[root][w]);
        overlap += std::popcount(bits);
      }
      ++report.bfs_pairs_checked;
      if (overlap > k) ++report.bfs_violations;
    }
    for (std::size_t i = 0; i <= asserted_layers && s > 0; ++i) {
      std::uint64_t size = i < layer_sizes.size() ? layer_sizes[i] : 0;
      if (size < binomial(s, i)) ++layer_failures;
    }
    if (root == f_vertices.front()) {
      report.layer_root = root;
      for (std::size_t i = 0; i < layer_sizes.size(); ++i) {
        LayerRow row;
        row.distance = i;
        row.size = layer_sizes[i];
        row.binomial_bound = binomial(s, i);
        row.asserted = s > 0 && i <= asserted_layers;
        row.sharpened_bound = i < sharpened.size() ? sharpened[i] : 0;
        report.layers.push_back(row);
      }
    }
  }
  if (f_vertices.empty()) {
    report.assertions.push_back(not_applicable("d:bfs-distance-claims", "F is empty"));
    report.assertions.push_back(not_applicable("e:layer-growth", "F is empty"));
  } else {
    report.assertions.push_back(make(
        "d:bfs-distance-claims", report.bfs_violations == 0,
        std::to_string(report.bfs_violations) + " violations over " +
            std::to_string(report.bfs_pairs_checked) + " (root, vertex) pairs"));
    if (s == 0) {
      report.assertions.push_back(not_applicable("e:layer-growth", "s = floor(t/8) = 0"));
    } else {
      report.assertions.push_back(make(
          "e:layer-growth", layer_failures == 0,
          "|N_i| >= C(" + std::to_string(s) + ", i) for i <= " +
              std::to_string(asserted_layers) + ": " +
              std::to_string(layer_failures) + " failures"));
    }
  }
  return report;
}

}  // namespace rsgraph

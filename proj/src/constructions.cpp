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

#include "rsgraph/constructions.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "rsgraph/error.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {
namespace {

// C(n, k) saturating at cap + 1.
std::uint64_t bounded_binomial(unsigned n, unsigned k, std::uint64_t cap) {
  std::uint64_t c = 1;
  for (unsigned i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > cap) return cap + 1;
  }
  return c;
}

void check_budget(std::uint64_t n, std::size_t budget, const char* what) {
  if (n > budget) {
    throw ResourceError(std::string(what) + ": " + std::to_string(n) +
                        " vertices exceeds budget " + std::to_string(budget));
  }
}

MatchingDecomposition assemble(std::size_t n, std::vector<Matching> matchings,
                               std::size_t r) {
  std::vector<Edge> edges;
  for (Matching& m : matchings) {
    std::sort(m.begin(), m.end());
    edges.insert(edges.end(), m.begin(), m.end());
  }
  return MatchingDecomposition(Graph(n, std::move(edges)), std::move(matchings), r);
}

}  // namespace

std::vector<std::uint64_t> kneser_vertex_sets(unsigned k) {
  const unsigned ground = 2 * k + 1;
  std::vector<std::uint64_t> sets;
  if (k == 0) return {0};
  const std::uint64_t last = std::uint64_t{1} << ground;
  // Gosper's hack walks k-subsets in increasing bitmask order.
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < last;) {
    sets.push_back(s);
    std::uint64_t c = s & -s;
    std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return sets;
}

MatchingDecomposition kneser_rs(unsigned k, std::size_t vertex_budget) {
  if (k == 0) throw ParameterError("kneser_rs: k must be >= 1");
  if (2 * k + 1 > 62) throw ResourceError("kneser_rs: k too large");
  const unsigned ground = 2 * k + 1;
  check_budget(bounded_binomial(ground, k, vertex_budget), vertex_budget,
               "kneser_rs");

  std::vector<std::uint64_t> sets = kneser_vertex_sets(k);
  const std::uint64_t full = (std::uint64_t{1} << ground) - 1;
  auto index_of = [&](std::uint64_t s) {
    return static_cast<Vertex>(std::lower_bound(sets.begin(), sets.end(), s) -
                               sets.begin());
  };
  std::vector<Matching> matchings(ground);
  for (Vertex a = 0; a < sets.size(); ++a) {
    for (unsigned i = 0; i < ground; ++i) {
      std::uint64_t bit = std::uint64_t{1} << i;
      if (sets[a] & bit) continue;
      std::uint64_t complement = full ^ sets[a] ^ bit;
      if (complement > sets[a]) matchings[i].emplace_back(a, index_of(complement));
    }
  }
  std::size_t r = matchings[0].size();
  return assemble(sets.size(), std::move(matchings), r);
}

MatchingDecomposition hypercube_rs(unsigned k, bool augmented,
                                   std::size_t vertex_budget) {
  if (k < 2) throw ParameterError("hypercube_rs: k must be >= 2");
  if (augmented && k % 2 != 0) {
    throw ParameterError("hypercube_rs: augmented construction needs even k");
  }
  if (k >= 63) throw ResourceError("hypercube_rs: k too large");
  const std::uint64_t n = std::uint64_t{1} << k;
  check_budget(n, vertex_budget, "hypercube_rs");

  auto odd = [](std::uint64_t v) { return std::popcount(v) % 2 == 1; };
  std::vector<Matching> matchings(augmented ? 2 * k + 2 : 2 * k);
  for (unsigned i = 0; i < k; ++i) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    for (std::uint64_t v = 0; v < n; ++v) {
      if (v & bit) continue;
      matchings[odd(v) ? k + i : i].emplace_back(static_cast<Vertex>(v),
                                                 static_cast<Vertex>(v | bit));
    }
  }
  if (augmented) {
    const std::uint64_t ones = n - 1;
    for (std::uint64_t v = 0; v < n; ++v) {
      std::uint64_t w = ones ^ v;
      if (v > w) continue;
      matchings[odd(v) ? 2 * k + 1 : 2 * k].emplace_back(
          static_cast<Vertex>(v), static_cast<Vertex>(w));
    }
  }
  return assemble(n, std::move(matchings), n / 4);
}

MatchingDecomposition disjoint_union(const MatchingDecomposition& dec,
                                     std::size_t copies) {
  if (copies == 0) throw ParameterError("disjoint_union: copies must be >= 1");
  require_verified(dec);
  const std::size_t n = dec.n();
  std::vector<Matching> matchings(dec.t());
  for (std::size_t i = 0; i < dec.t(); ++i) {
    for (std::size_t c = 0; c < copies; ++c) {
      const auto offset = static_cast<Vertex>(c * n);
      for (const Edge& e : dec.matchings()[i]) {
        matchings[i].emplace_back(e.u + offset, e.v + offset);
      }
    }
  }
  return assemble(copies * n, std::move(matchings), copies * dec.r());
}

MatchingDecomposition double_cover(const MatchingDecomposition& dec) {
  require_verified(dec);
  const auto n = static_cast<Vertex>(dec.n());
  std::vector<Matching> matchings(dec.t());
  for (std::size_t i = 0; i < dec.t(); ++i) {
    for (const Edge& e : dec.matchings()[i]) {
      matchings[i].emplace_back(e.u, e.v + n);
      matchings[i].emplace_back(e.v, e.u + n);
    }
  }
  return assemble(2 * dec.n(), std::move(matchings), 2 * dec.r());
}

MatchingDecomposition cayley_rs(std::uint64_t modulus,
                                std::span<const std::uint64_t> differences) {
  if (modulus % 2 == 0) throw ParameterError("cayley_rs: modulus must be odd");
  if (differences.empty()) throw ParameterError("cayley_rs: empty difference set");
  std::vector<std::uint64_t> s(differences.begin(), differences.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
    throw ParameterError("cayley_rs: repeated difference");
  }
  if (s.front() == 0 || 3 * s.back() > modulus - 1) {
    throw ParameterError("cayley_rs: differences must lie in [1, (N-1)/3] for N=" +
                         std::to_string(modulus));
  }
  check_budget(2 * modulus, kDefaultVertexBudget, "cayley_rs");

  const std::uint64_t N = modulus;
  std::vector<Matching> matchings(N);
  for (std::uint64_t z = 0; z < N; ++z) {
    for (std::uint64_t a : s) {
      std::uint64_t x = (z + 2 * N - 2 * a) % N;
      std::uint64_t y = (z + N - a) % N;
      matchings[z].emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(N + y));
    }
  }
  return assemble(2 * N, std::move(matchings), s.size());
}

std::string_view to_string(Family family) {
  switch (family) {
    case Family::kKneser: return "kneser";
    case Family::kHypercube: return "hypercube";
    case Family::kHypercubeAugmented: return "hypercube-augmented";
    case Family::kDisjointUnion: return "disjoint-union";
    case Family::kDoubleCover: return "double-cover";
    case Family::kCayleyAP: return "cayley-ap";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::kKneser, Family::kHypercube,
                   Family::kHypercubeAugmented, Family::kDisjointUnion,
                   Family::kDoubleCover, Family::kCayleyAP}) {
    if (to_string(f) == name) return f;
  }
  return std::nullopt;
}

MatchingDecomposition construct(const ConstructionSpec& spec) {
  switch (spec.family) {
    case Family::kKneser:
      return kneser_rs(spec.k, spec.vertex_budget);
    case Family::kHypercube:
      return hypercube_rs(spec.k, false, spec.vertex_budget);
    case Family::kHypercubeAugmented:
      return hypercube_rs(spec.k, true, spec.vertex_budget);
    case Family::kCayleyAP: {
      if (spec.modulus < 3) throw ParameterError("cayley-ap: modulus N must be >= 3");
      if (spec.set) return cayley_rs(spec.modulus, *spec.set);
      std::uint64_t limit = spec.limit.value_or((spec.modulus - 1) / 3);
      APFreeSet s = ap_free_set(spec.ap_method, limit);
      return cayley_rs(spec.modulus, s.elements);
    }
    case Family::kDisjointUnion:
    case Family::kDoubleCover: {
      if (spec.base == Family::kDisjointUnion || spec.base == Family::kDoubleCover) {
        throw ParameterError("base family must be a primitive construction");
      }
      ConstructionSpec base = spec;
      base.family = spec.base;
      MatchingDecomposition inner = construct(base);
      if (spec.family == Family::kDoubleCover) return double_cover(inner);
      return disjoint_union(inner, spec.copies);
    }
  }
  throw ParameterError("unknown family");
}

}  // namespace rsgraph

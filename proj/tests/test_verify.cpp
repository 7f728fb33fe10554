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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "rsgraph/constructions.hpp"
#include "rsgraph/error.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {
namespace {

// Petersen graph as KG(5,2) with its five induced matchings.
MatchingDecomposition petersen() { return kneser_rs(2); }

TEST(InducedMatchingCheck, PassesOnInducedMatching) {
  Graph g(4, {Edge(0, 1), Edge(2, 3)});
  std::vector<Edge> m{Edge(0, 1), Edge(2, 3)};
  EXPECT_TRUE(induced_matching_check(g, m).pass());
}

TEST(InducedMatchingCheck, ReportsSharedVertex) {
  Graph g(3, {Edge(0, 1), Edge(1, 2)});
  std::vector<Edge> m{Edge(0, 1), Edge(1, 2)};
  auto res = induced_matching_check(g, m);
  EXPECT_EQ(res.status, InducedMatchingResult::Status::kNotMatching);
  EXPECT_EQ(res.witness, (std::vector<Vertex>{1}));
}

TEST(InducedMatchingCheck, ReportsSmallestChord) {
  // Path 0-1-2-3 plus chord 0-3; {01, 23} has chords 12 and 03.
  Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(2, 3), Edge(0, 3)});
  std::vector<Edge> m{Edge(2, 3), Edge(0, 1)};
  auto res = induced_matching_check(g, m);
  EXPECT_EQ(res.status, InducedMatchingResult::Status::kNotInduced);
  EXPECT_EQ(res.witness, (std::vector<Vertex>{0, 3}));
}

TEST(InducedMatchingCheck, RejectsForeignEdge) {
  Graph g(4, {Edge(0, 1)});
  std::vector<Edge> m{Edge(2, 3)};
  EXPECT_THROW(induced_matching_check(g, m), MalformedInputError);
}

TEST(InducedMatchingCheck, AgreesWithBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3000; ++trial) {
    unsigned n = 2 + rng() % 7;
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 2) es.emplace_back(a, b);
    if (es.empty()) continue;
    Graph g(n, es);
    std::vector<Edge> m;
    for (const Edge& e : es)
      if (rng() % 3 == 0) m.push_back(e);
    bool expected = oracle::is_induced_matching(oracle::to_list(g.edges()),
                                                oracle::to_list(m));
    EXPECT_EQ(induced_matching_check(g, m).pass(), expected);
  }
}

TEST(VerifyDecomposition, PetersenPasses) {
  VerificationReport rep = verify_decomposition(petersen());
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.stats.n, 10u);
  EXPECT_EQ(rep.stats.max_degree_sum, 6u);
  EXPECT_LE(rep.stats.max_intersection, 3u);
  EXPECT_EQ(rep.stats.degree_histogram[3], 10u);
}

TEST(VerifyDecomposition, ReportsEveryViolatedInvariant) {
  // Triangle as one matching of size 3: not a matching, not induced-free,
  // fine on coverage.
  Graph g(3, {Edge(0, 1), Edge(1, 2), Edge(0, 2)});
  MatchingDecomposition dec(g, {{Edge(0, 1), Edge(1, 2), Edge(0, 2)}}, 3);
  VerificationReport rep = verify_decomposition(dec);
  EXPECT_FALSE(rep.pass());
  EXPECT_NE(rep.find(invariant::kNotMatching), nullptr);
  EXPECT_EQ(rep.find(invariant::kNotCovering), nullptr);
}

TEST(VerifyDecomposition, CoverageAndDisjointness) {
  Graph g(4, {Edge(0, 1), Edge(2, 3)});
  MatchingDecomposition missing(g, {{Edge(0, 1)}}, 1);
  EXPECT_NE(verify_decomposition(missing).find(invariant::kNotCovering), nullptr);

  MatchingDecomposition twice(g, {{Edge(0, 1)}, {Edge(0, 1)}, {Edge(2, 3)}}, 1);
  VerificationReport twice_report = verify_decomposition(twice);
  const Violation* v = twice_report.find(invariant::kNotEdgeDisjoint);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->witness, (std::vector<Vertex>{0, 1}));

  MatchingDecomposition foreign(g, {{Edge(0, 2)}, {Edge(0, 1)}, {Edge(2, 3)}}, 1);
  EXPECT_NE(verify_decomposition(foreign).find(invariant::kEdgeNotInGraph), nullptr);

  MatchingDecomposition sized(g, {{Edge(0, 1), Edge(2, 3)}}, 1);
  EXPECT_NE(verify_decomposition(sized).find(invariant::kSizeMismatch), nullptr);
}

TEST(VerifyDecomposition, StructuralErrorsThrow) {
  Graph g(3, {Edge(0, 1)});
  MatchingDecomposition loop(g, {{Edge(2, 2)}}, 1);
  EXPECT_THROW(verify_decomposition(loop), MalformedInputError);
  MatchingDecomposition range(g, {{Edge(0, 7)}}, 1);
  EXPECT_THROW(verify_decomposition(range), MalformedInputError);
}

TEST(VerifyDecomposition, DegreeSumBound) {
  // Star K_{1,3} as three singleton matchings meets d_u + d_v = t + 1.
  Graph g(4, {Edge(0, 1), Edge(1, 2), Edge(1, 3)});
  MatchingDecomposition dec(g, {{Edge(0, 1)}, {Edge(1, 2)}, {Edge(1, 3)}}, 1);
  VerificationReport rep = verify_decomposition(dec);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.stats.max_degree_sum, 4u);

  MatchingDecomposition two(g, {{Edge(0, 1)}, {Edge(1, 2), Edge(1, 3)}}, 1);
  VerificationReport two_report = verify_decomposition(two);
  const Violation* v = two_report.find(invariant::kDegreeSum);
  ASSERT_NE(v, nullptr);
  EXPECT_EQ(v->count, 3u);
}

// Random partitions of random graphs: the verifier agrees with the
// definition, and every passing instance satisfies the derived invariants.
TEST(VerifyDecomposition, PropertyAgreesWithDefinition) {
  std::mt19937_64 rng(11);
  int passes = 0;
  for (int trial = 0; trial < 4000; ++trial) {
    unsigned n = 2 + rng() % 7;
    std::vector<Edge> es;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (rng() % 3 == 0) es.emplace_back(a, b);
    if (es.empty()) continue;
    std::size_t t = 1 + rng() % es.size();
    std::vector<Matching> ms(t);
    for (const Edge& e : es) ms[rng() % t].push_back(e);
    std::size_t r = ms[0].size();
    MatchingDecomposition dec(Graph(n, es), ms, r);
    VerificationReport rep = verify_decomposition(dec);
    bool expected = oracle::is_rs_decomposition(dec);
    ASSERT_EQ(rep.pass(), expected) << "trial " << trial;
    if (rep.pass()) {
      ++passes;
      EXPECT_LE(rep.stats.max_degree_sum, t + 1);
      EXPECT_LE(rep.stats.max_intersection, r);
    }
  }
  EXPECT_GT(passes, 50);
}

TEST(DecompositionStats, RequiresVerifiedInput) {
  Graph g(3, {Edge(0, 1), Edge(1, 2)});
  MatchingDecomposition bad(g, {{Edge(0, 1), Edge(1, 2)}}, 2);
  EXPECT_THROW(decomposition_stats(bad), PreconditionError);
  EXPECT_THROW(require_verified(bad), PreconditionError);
  DecompositionStats s = decomposition_stats(petersen());
  EXPECT_EQ(s.params, RSParameters::of(10, 3, 5));
}

TEST(VerifyDecomposition, CountsIsolatedVertices) {
  Graph g(5, {Edge(0, 1)});
  MatchingDecomposition dec(g, {{Edge(0, 1)}}, 1);
  VerificationReport rep = verify_decomposition(dec);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.stats.isolated_vertices, 3u);
}

}  // namespace
}  // namespace rsgraph

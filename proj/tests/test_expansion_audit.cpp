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

#include "rsgraph/constructions.hpp"
#include "rsgraph/error.hpp"
#include "rsgraph/expansion_audit.hpp"

namespace rsgraph {
namespace {

const AuditAssertion& find(const AuditReport& rep, std::string_view name) {
  for (const AuditAssertion& a : rep.assertions)
    if (a.name == name) return a;
  throw std::out_of_range(std::string(name));
}

TEST(ExpansionAudit, HypercubeIsTightQuarterCase) {
  for (auto [k, aug] : {std::pair{2u, false}, std::pair{4u, true}, std::pair{4u, false},
                        std::pair{6u, true}}) {
    AuditReport rep = expansion_audit(hypercube_rs(k, aug));
    EXPECT_TRUE(rep.pass());
    EXPECT_TRUE(rep.quarter);
    // Augmented cubes contain odd cycles (Q4 plus antipodes is Clebsch).
    EXPECT_EQ(rep.double_covered, aug);
    EXPECT_EQ(4 * (2 * rep.e1 + rep.e0), rep.n * rep.t) << k;
    EXPECT_EQ(rep.bfs_violations, 0u);
    EXPECT_EQ(find(rep, "b:2E1+E0>=nt/4").status, AssertionStatus::kPass);
    EXPECT_EQ(find(rep, "c:F-nonempty").status, AssertionStatus::kPass);
  }
}

TEST(ExpansionAudit, ExcessIdentityHoldsEverywhere) {
  for (const MatchingDecomposition& dec :
       {kneser_rs(2), kneser_rs(3), hypercube_rs(5, false),
        disjoint_union(hypercube_rs(4, true), 2)}) {
    AuditReport rep = expansion_audit(dec);
    EXPECT_EQ(rep.excess_by_edges, rep.excess_by_squares);
    EXPECT_EQ(rep.e_over, 0u);
    std::uint64_t total = rep.e1 + rep.e0 + rep.e_over;
    for (std::uint64_t x : rep.e_neg) total += x;
    EXPECT_EQ(total, rep.num_edges);
    EXPECT_EQ(find(rep, "excess-identity").status, AssertionStatus::kPass);
    EXPECT_TRUE(rep.pass());
  }
}

TEST(ExpansionAudit, NonBipartiteInputIsDoubleCovered) {
  AuditReport rep = expansion_audit(kneser_rs(2));
  EXPECT_TRUE(rep.double_covered);
  EXPECT_EQ(rep.n, 20u);
  EXPECT_EQ(rep.r, 6u);
  EXPECT_EQ(rep.t, 5u);
  EXPECT_EQ(find(rep, "b:2E1+E0>=nt/4").status, AssertionStatus::kNotApplicable);
}

TEST(ExpansionAudit, LayerGrowthOnLargeT) {
  // t = 18 gives s = 2: the layer rows are asserted.
  AuditReport rep = expansion_audit(hypercube_rs(8, true));
  EXPECT_EQ(find(rep, "e:layer-growth").status, AssertionStatus::kPass);
  ASSERT_GE(rep.layers.size(), 2u);
  EXPECT_TRUE(rep.layers[0].asserted);
  EXPECT_EQ(rep.layers[0].size, 1u);
}

TEST(ExpansionAudit, RequiresVerifiedInput) {
  Graph g(3, {Edge(0, 1), Edge(1, 2)});
  MatchingDecomposition bad(g, {{Edge(0, 1), Edge(1, 2)}}, 2);
  EXPECT_THROW(expansion_audit(bad), PreconditionError);
}

}  // namespace
}  // namespace rsgraph

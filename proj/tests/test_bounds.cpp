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

#include <cmath>

#include "oracles.hpp"
#include "rsgraph/bounds.hpp"
#include "rsgraph/constructions.hpp"
#include "rsgraph/error.hpp"

namespace rsgraph {
namespace {

TEST(MaxR, KnownValues) {
  EXPECT_EQ(max_r(10, 5), Rational(3));
  EXPECT_EQ(max_r(6, 4), Rational(9, 5));
  EXPECT_EQ(max_r(10, 6), Rational(20, 7));
  EXPECT_EQ(max_r(3, 3), Rational(1));
  EXPECT_EQ(to_string(max_r(6, 4)), "9/5");
  EXPECT_EQ(to_string(max_r(10, 5)), "3");
  EXPECT_THROW(max_r(0, 3), ParameterError);
  EXPECT_THROW(max_r(3, 0), ParameterError);
}

TEST(MaxR, MatchesIndependentFraction) {
  for (std::uint64_t n = 1; n <= 200; ++n) {
    for (std::uint64_t t = 1; t <= 60; ++t) {
      auto [num, den] = oracle::max_r_fraction(n, t);
      Rational q = max_r(n, t);
      ASSERT_EQ(static_cast<std::uint64_t>(q.numerator()), num) << n << " " << t;
      ASSERT_EQ(static_cast<std::uint64_t>(q.denominator()), den) << n << " " << t;
    }
  }
}

TEST(MaxR, EvenTEqualsNextOddT) {
  for (std::uint64_t n = 1; n <= 50; ++n)
    for (std::uint64_t t = 2; t <= 40; t += 2) EXPECT_EQ(max_r(n, t), max_r(n, t + 1));
}

TEST(MaxR, AlwaysAboveQuarter) {
  for (std::uint64_t n = 1; n <= 50; ++n)
    for (std::uint64_t t = 1; t <= 40; ++t)
      EXPECT_GT(max_r(n, t), Rational(static_cast<std::int64_t>(n), 4));
}

TEST(QuarterTLimit, Values) {
  EXPECT_EQ(quarter_t_limit(1), 8u);
  EXPECT_EQ(quarter_t_limit(2), 16u);
  EXPECT_EQ(quarter_t_limit(16), 40u);
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    std::uint64_t lim = quarter_t_limit(n);
    double exact = 8.0 * (std::log2(static_cast<double>(n)) + 1.0);
    EXPECT_LE(static_cast<double>(lim), exact + 1e-9) << n;
    EXPECT_GT(static_cast<double>(lim) + 1.0, exact - 1e-9) << n;
  }
}

TEST(FeasibilityVerdict, Regimes) {
  BoundVerdict above = feasibility_verdict(10, 3, 5);
  EXPECT_EQ(above.regime, Regime::kAboveQuarter);
  EXPECT_TRUE(above.feasible);
  EXPECT_TRUE(above.tight);
  ASSERT_TRUE(above.hard_bound.has_value());
  EXPECT_EQ(*above.hard_bound, Rational(3));

  BoundVerdict over = feasibility_verdict(10, 3, 6);
  EXPECT_FALSE(over.feasible);
  EXPECT_EQ(*over.hard_bound, Rational(20, 7));

  BoundVerdict quarter = feasibility_verdict(16, 4, 41);
  EXPECT_EQ(quarter.regime, Regime::kExactlyQuarter);
  EXPECT_FALSE(quarter.feasible);
  EXPECT_EQ(quarter.max_t_quarter, 40u);
  EXPECT_TRUE(feasibility_verdict(16, 4, 40).feasible);

  BoundVerdict below = feasibility_verdict(100, 22, 1000);
  EXPECT_EQ(below.regime, Regime::kBelowQuarter);
  EXPECT_TRUE(below.feasible);
  ASSERT_TRUE(below.epsilon.has_value());
  EXPECT_EQ(*below.epsilon, Rational(1, 50));
  EXPECT_EQ(*below.proof_constant_k, Rational(5000));
  EXPECT_FALSE(feasibility_verdict(100, 20, 10).epsilon.has_value());

  EXPECT_THROW(feasibility_verdict(5, 3, 1), ParameterError);
  EXPECT_TRUE(feasibility_verdict(5, 2, 0).feasible);
}

TEST(FeasibilityVerdict, AgreesWithMaxR) {
  for (std::uint64_t n = 1; n <= 40; ++n)
    for (std::uint64_t r = n / 4 + 1; 2 * r <= n; ++r)
      for (std::uint64_t t = 1; t <= 20; ++t)
        EXPECT_EQ(feasibility_verdict(n, r, t).feasible,
                  Rational(static_cast<std::int64_t>(r)) <= max_r(n, t));
}

TEST(DistanceCertificate, KneserTwo) {
  DistanceCertificate c = distance_certificate(kneser_rs(2));
  EXPECT_EQ(c.min_distance, 6u);
  EXPECT_TRUE(c.pass());
  EXPECT_EQ(c.lhs, 3u * 5 * 6);
  EXPECT_EQ(c.pairwise_sum, c.coordinate_sum);
  EXPECT_EQ(c.rhs, 10u * 36 / 4);
  EXPECT_TRUE(c.max_r_binding);
}

TEST(DistanceCertificate, TightFamiliesHaveZeroSlack) {
  // Kneser graphs attain max r, so both sides of the double count meet.
  for (unsigned k = 1; k <= 4; ++k) {
    DistanceCertificate c = distance_certificate(kneser_rs(k));
    EXPECT_TRUE(c.pass());
    EXPECT_EQ(c.lower_slack, 0) << k;
    EXPECT_EQ(c.upper_slack, 0) << k;
  }
}

TEST(DistanceCertificate, NonnegativeSlackOnOtherFamilies) {
  for (const MatchingDecomposition& dec :
       {hypercube_rs(3, false), hypercube_rs(4, true), double_cover(kneser_rs(3)),
        disjoint_union(kneser_rs(2), 2)}) {
    DistanceCertificate c = distance_certificate(dec);
    EXPECT_TRUE(c.pass());
    EXPECT_GE(c.lower_slack, 0);
    EXPECT_GE(c.upper_slack, 0);
  }
}

}  // namespace
}  // namespace rsgraph

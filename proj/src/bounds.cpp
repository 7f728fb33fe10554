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

#include "rsgraph/bounds.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "rsgraph/error.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {

Rational max_r(std::uint64_t n, std::uint64_t t) {
  if (n == 0 || t == 0) throw ParameterError("max_r: n and t must be >= 1");
  const auto nn = static_cast<std::int64_t>(n);
  const auto tt = static_cast<std::int64_t>(t);
  // Odd t: (n/4)(1 + 1/t). Even t: (n/4)(1 + 1/(t+1)).
  const std::int64_t denom = (t % 2 == 1) ? tt : tt + 1;
  return Rational(nn, 4) * Rational(denom + 1, denom);
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kAboveQuarter: return "above-quarter";
    case Regime::kExactlyQuarter: return "exactly-quarter";
    case Regime::kBelowQuarter: return "below-quarter";
  }
  return "unknown";
}

std::uint64_t quarter_t_limit(std::uint64_t n) {
  if (n == 0) throw ParameterError("quarter_t_limit: n must be >= 1");
  // t <= 8 log2 n + 8  <=>  t - 8 <= floor(log2(n^8)).
  boost::multiprecision::cpp_int p = n;
  p = p * p;
  p = p * p;
  p = p * p;
  return 8 + static_cast<std::uint64_t>(boost::multiprecision::msb(p));
}

BoundVerdict feasibility_verdict(std::uint64_t n, std::uint64_t r,
                                 std::uint64_t t) {
  if (n == 0) throw ParameterError("feasibility_verdict: n must be >= 1");
  if (2 * r > n) {
    throw ParameterError("impossible parameters: a matching of size " +
                         std::to_string(r) + " needs " + std::to_string(2 * r) +
                         " > n = " + std::to_string(n) + " vertices");
  }
  BoundVerdict v;
  v.n = n;
  v.r = r;
  v.t = t;
  v.regime = 4 * r > n    ? Regime::kAboveQuarter
             : 4 * r == n ? Regime::kExactlyQuarter
                          : Regime::kBelowQuarter;
  if (t == 0) {
    v.reason = "t = 0: the edgeless graph is vacuously a decomposition";
    return v;
  }

  switch (v.regime) {
    case Regime::kAboveQuarter: {
      Rational bound = max_r(n, t);
      v.hard_bound = bound;
      Rational rr(static_cast<std::int64_t>(r));
      v.feasible = rr <= bound;
      v.tight = rr == bound;
      v.reason = "max r = " + to_string(bound) + (v.feasible ? " >= r = " : " < r = ") +
                 std::to_string(r);
      v.advisory.push_back(
          {"for r = cn with c > 1/4 the number of matchings is bounded by a "
           "constant depending only on c; the bound on r is attained by "
           "KG(2k+1, k) and its disjoint copies for odd t",
           "Plotkin-style double count over characteristic vectors"});
      break;
    }
    case Regime::kExactlyQuarter: {
      v.max_t_quarter = quarter_t_limit(n);
      v.feasible = t <= *v.max_t_quarter;
      v.reason = "r = n/4 requires t <= 8(log2 n + 1), i.e. t <= " +
                 std::to_string(*v.max_t_quarter);
      v.advisory.push_back({"t <= (6 + o(1)) log2 n (asymptotic, no explicit "
                            "finite-n constant)",
                            "degree-sum expansion argument, sharpened"});
      v.advisory.push_back({"if G is regular: t <= 2(log2 n + 1); hypercube "
                            "constructions attain 2 log2 n, and 2(log2 n + 1) "
                            "when log2 n is even",
                            "regular-graph refinement of the expansion argument"});
      break;
    }
    case Regime::kBelowQuarter: {
      Rational c(static_cast<std::int64_t>(r), static_cast<std::int64_t>(n));
      Rational fifth(1, 5);
      if (c > fifth) {
        v.epsilon = c - fifth;
        v.proof_constant_k = Rational(100) / *v.epsilon;
        v.advisory.push_back(
            {"for 1/5 + eps <= c < 1/4: t = O(n / log n); eps = " +
                 to_string(*v.epsilon) + ", proof constant K = 100/eps = " +
                 to_string(*v.proof_constant_k),
             "greedy max-degree covering plus the r = n/4 bound"});
      }
      v.advisory.push_back(
          {"there is an absolute b > 0 (b = 1e-9 suffices) such that "
           "r >= (1/4 - b) n implies t = n / ((log n) 2^{Omega(log* n)})",
           "triangle-removal based refinement"});
      v.advisory.push_back({"for every fixed c > 0: t = o(n)",
                            "regularity / triangle-removal bounds"});
      v.reason = "no finite-n hard bound applies below r = n/4";
      break;
    }
  }
  return v;
}

DistanceCertificate distance_certificate(const MatchingDecomposition& dec) {
  require_verified(dec);
  DistanceCertificate cert;
  cert.n = dec.n();
  cert.r = dec.r();
  cert.t = dec.t();
  const std::size_t n = cert.n;
  const std::size_t t = cert.t;
  const std::size_t words = (n + 63) / 64;

  // vectors[0] is the all-zero vector v_0.
  std::vector<std::vector<std::uint64_t>> vectors(t + 1,
                                                  std::vector<std::uint64_t>(words, 0));
  std::vector<std::uint64_t> ones_count(n, 0);
  for (std::size_t i = 0; i < t; ++i) {
    for (const Edge& e : dec.matchings()[i]) {
      for (Vertex x : {e.u, e.v}) {
        vectors[i + 1][x / 64] |= std::uint64_t{1} << (x % 64);
        ++ones_count[x];
      }
    }
  }

  cert.min_distance = t == 0 ? 0 : std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i <= t; ++i) {
    for (std::size_t j = i + 1; j <= t; ++j) {
      std::size_t d = 0;
      for (std::size_t w = 0; w < words; ++w) {
        d += std::popcount(vectors[i][w] ^ vectors[j][w]);
      }
      cert.pairwise_sum += d;
      if (d < cert.min_distance) {
        cert.min_distance = d;
        cert.min_pair_i = i;
        cert.min_pair_j = j;
      }
    }
  }
  cert.distance_ok = t == 0 || cert.min_distance >= 2 * cert.r;

  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t b = ones_count[x];
    std::uint64_t a = (t + 1) - b;
    cert.coordinate_sum += a * b;
  }
  cert.lhs = static_cast<std::uint64_t>(cert.r) * t * (t + 1);
  cert.rhs = (t % 2 == 1) ? n * (t + 1) * (t + 1) / 4 : n * t * (t + 2) / 4;
  cert.lower_slack = static_cast<std::int64_t>(cert.pairwise_sum) -
                     static_cast<std::int64_t>(cert.lhs);
  cert.upper_slack = static_cast<std::int64_t>(cert.rhs) -
                     static_cast<std::int64_t>(cert.coordinate_sum);
  cert.max_r_binding = 4 * cert.r > n;
  return cert;
}

}  // namespace rsgraph

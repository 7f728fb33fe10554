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

#include <fstream>
#include <sstream>

#include "rsgraph/constructions.hpp"
#include "rsgraph/error.hpp"
#include "rsgraph/rsg_format.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {
namespace {

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(RSG_GOLDEN_DIR) + "/" + name, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::size_t error_line(std::string_view text) {
  try {
    parse_rsg(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(RsgFormat, KneserGolden) {
  std::string golden = read_golden("kneser_k2.rsg");
  ASSERT_FALSE(golden.empty());
  EXPECT_EQ(emit_rsg(kneser_rs(2)), golden);
}

TEST(RsgFormat, RoundTripIsByteIdentical) {
  for (const MatchingDecomposition& dec :
       {kneser_rs(1), kneser_rs(3), hypercube_rs(4, true), double_cover(kneser_rs(2)),
        disjoint_union(hypercube_rs(3, false), 3)}) {
    std::string doc = emit_rsg(dec);
    MatchingDecomposition back = parse_rsg(doc);
    EXPECT_EQ(emit_rsg(back), doc);
    EXPECT_TRUE(verify_decomposition(back).pass());
  }
}

TEST(RsgFormat, AcceptsTabsAndUnsortedRecords) {
  MatchingDecomposition dec = parse_rsg("rsg 4 2 1\n2\t3 1\n0 1 0\n");
  EXPECT_EQ(dec.t(), 2u);
  EXPECT_EQ(emit_rsg(dec), "rsg 4 2 1\n0 1 0\n2 3 1\n");
}

TEST(RsgFormat, EmptyMatchingsSurvive) {
  MatchingDecomposition dec = parse_rsg("rsg 5 3 0\n");
  EXPECT_EQ(dec.n(), 5u);
  EXPECT_EQ(dec.t(), 3u);
  EXPECT_EQ(emit_rsg(dec), "rsg 5 3 0\n");
}

TEST(RsgFormat, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line(""), 1u);
  EXPECT_EQ(error_line("rsg 4 2 1"), 1u);
  EXPECT_EQ(error_line("graph 4 2 1\n"), 1u);
  EXPECT_EQ(error_line("rsg 4 2\n"), 1u);
  EXPECT_EQ(error_line("rsg 4 x 1\n"), 1u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n1 1 1\n"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 4 1\n"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 3 2\n"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 3\n"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 3 -1\n"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 3 1"), 3u);
  EXPECT_EQ(error_line("rsg 4 2 1\n0 1 0\n2 3 1\n0 1 1\n"), 4u);
  EXPECT_EQ(error_line("rsg 99999999 2 1\n"), 1u);
}

TEST(RsgFormat, ParseDoesNotVerify) {
  MatchingDecomposition dec = parse_rsg("rsg 3 1 2\n0 1 0\n1 2 0\n");
  EXPECT_FALSE(verify_decomposition(dec).pass());
}

}  // namespace
}  // namespace rsgraph

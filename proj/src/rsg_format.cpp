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

#include "rsgraph/rsg_format.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <optional>
#include <tuple>
#include <vector>

#include "rsgraph/error.hpp"

namespace rsgraph {
namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 24;

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) fields.push_back(line.substr(i, j - i));
    i = j;
  }
  return fields;
}

std::uint64_t to_number(std::string_view field, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size()) {
    throw ParseError(line, "expected a non-negative integer, got '" +
                               std::string(field) + "'");
  }
  return value;
}

}  // namespace

MatchingDecomposition parse_rsg(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) {
      throw ParseError(lines.size() + 1, "missing newline at end of line");
    }
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw ParseError(1, "empty document");

  auto header = split_fields(lines[0]);
  if (header.size() != 4 || header[0] != "rsg") {
    throw ParseError(1, "header must be 'rsg <n> <t> <r>'");
  }
  const std::uint64_t n = to_number(header[1], 1);
  const std::uint64_t t = to_number(header[2], 1);
  const std::uint64_t r = to_number(header[3], 1);
  if (n > kMaxVertices) throw ParseError(1, "n too large");
  if (t > kMaxVertices) throw ParseError(1, "t too large");

  std::vector<Matching> matchings(t);
  std::vector<std::tuple<Edge, std::size_t>> seen;
  std::vector<Edge> edges;
  edges.reserve(lines.size() - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::size_t line = i + 1;
    auto fields = split_fields(lines[i]);
    if (fields.size() != 3) throw ParseError(line, "record must be '<u> <v> <m>'");
    std::uint64_t u = to_number(fields[0], line);
    std::uint64_t v = to_number(fields[1], line);
    std::uint64_t m = to_number(fields[2], line);
    if (u >= v) throw ParseError(line, "record needs u < v");
    if (v >= n) throw ParseError(line, "vertex " + std::to_string(v) + " out of range");
    if (m >= t) throw ParseError(line, "matching index " + std::to_string(m) + " out of range");
    Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
    seen.emplace_back(e, line);
    edges.push_back(e);
    matchings[m].push_back(e);
  }
  // Report the earliest line that repeats an edge.
  std::sort(seen.begin(), seen.end());
  std::optional<std::tuple<std::size_t, Edge>> duplicate;
  for (std::size_t i = 1; i < seen.size(); ++i) {
    if (std::get<0>(seen[i]) != std::get<0>(seen[i - 1])) continue;
    auto candidate = std::make_tuple(std::get<1>(seen[i]), std::get<0>(seen[i]));
    if (!duplicate || candidate < *duplicate) duplicate = candidate;
  }
  if (duplicate) {
    const Edge& e = std::get<1>(*duplicate);
    throw ParseError(std::get<0>(*duplicate), "duplicate edge " + std::to_string(e.u) +
                                                  " " + std::to_string(e.v));
  }
  return MatchingDecomposition(Graph(n, std::move(edges)), std::move(matchings), r);
}

std::string emit_rsg(const MatchingDecomposition& dec) {
  std::string out = "rsg " + std::to_string(dec.n()) + " " +
                    std::to_string(dec.t()) + " " + std::to_string(dec.r()) + "\n";
  for (std::size_t m = 0; m < dec.t(); ++m) {
    Matching sorted = dec.matchings()[m];
    std::sort(sorted.begin(), sorted.end());
    for (const Edge& e : sorted) {
      out += std::to_string(e.u) + " " + std::to_string(e.v) + " " +
             std::to_string(m) + "\n";
    }
  }
  return out;
}

}  // namespace rsgraph

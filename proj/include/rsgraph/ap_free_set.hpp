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

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rsgraph {

enum class APMethod { kGreedyBase3, kBehrend };

std::string_view to_string(APMethod method);
// Accepts "greedy-base3" and "behrend".
std::optional<APMethod> parse_ap_method(std::string_view name);

// A subset of [1, limit] with no three-term arithmetic progression
// x + z = 2y other than x = y = z.
struct APFreeSet {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> elements;  // strictly increasing
  APMethod requested = APMethod::kGreedyBase3;
  APMethod used = APMethod::kGreedyBase3;
  // Set when behrend was requested for a limit too small to be meaningful.
  bool fell_back = false;
};

// Builds the set and brute-force checks it for 3-APs when limit <= 1e5.
// Throws ParameterError for limit == 0.
APFreeSet ap_free_set(APMethod method, std::uint64_t limit);

// Some (x, y, z) in the sorted set with x < y < z and x + z = 2y.
std::optional<std::array<std::uint64_t, 3>> find_three_term_progression(
    std::span<const std::uint64_t> sorted);

}  // namespace rsgraph

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

#include "rsgraph/ap_free_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rsgraph/error.hpp"

namespace rsgraph {
namespace {

constexpr std::uint64_t kVerifyLimit = 100000;
constexpr std::uint64_t kBehrendMinLimit = 8;

std::vector<std::uint64_t> greedy_base3(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t x = 1; x <= limit; ++x) {
    std::uint64_t y = x - 1;
    bool ok = true;
    while (y > 0 && ok) {
      ok = y % 3 != 2;
      y /= 3;
    }
    if (ok) out.push_back(x);
  }
  return out;
}

// q^d, saturating at limit + 1.
std::uint64_t bounded_power(std::uint64_t q, unsigned d, std::uint64_t limit) {
  std::uint64_t p = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (p > (limit + 1) / q) return limit + 1;
    p *= q;
  }
  return p;
}

// Digit vectors in {0..h-1}^d with h = floor(q/2) written in base q never
// carry when two of them are added, so x + z = 2y holds digitwise; on a
// sphere sum x_i^2 = s strict convexity then forces x = y = z.
std::vector<std::uint64_t> behrend_layer(std::uint64_t limit) {
  double log_m = std::log(static_cast<double>(limit));
  unsigned d = std::max(1u, static_cast<unsigned>(std::lround(std::sqrt(log_m))));
  auto q = static_cast<std::uint64_t>(
      std::floor(std::pow(static_cast<double>(limit), 1.0 / d)));
  q = std::max<std::uint64_t>(q, 1);
  while (q > 1 && bounded_power(q, d, limit) > limit) --q;
  while (bounded_power(q + 1, d, limit) <= limit) ++q;
  const std::uint64_t h = q / 2;
  if (h == 0) return {};

  std::uint64_t count = 1;
  for (unsigned i = 0; i < d; ++i) count *= h;
  const std::uint64_t max_norm = d * (h - 1) * (h - 1);
  std::vector<std::uint64_t> layer_size(max_norm + 1, 0);
  std::vector<std::uint64_t> digits(d, 0);
  auto norm = [&] {
    std::uint64_t s = 0;
    for (std::uint64_t x : digits) s += x * x;
    return s;
  };
  auto advance = [&] {
    for (unsigned i = 0; i < d; ++i) {
      if (++digits[i] < h) return;
      digits[i] = 0;
    }
  };
  for (std::uint64_t k = 0; k < count; ++k, advance()) ++layer_size[norm()];
  auto best = static_cast<std::uint64_t>(
      std::max_element(layer_size.begin(), layer_size.end()) - layer_size.begin());

  std::vector<std::uint64_t> out;
  std::fill(digits.begin(), digits.end(), 0);
  for (std::uint64_t k = 0; k < count; ++k, advance()) {
    if (norm() != best) continue;
    std::uint64_t value = 0;
    for (unsigned i = d; i-- > 0;) value = value * q + digits[i];
    out.push_back(value + 1);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string_view to_string(APMethod method) {
  return method == APMethod::kBehrend ? "behrend" : "greedy-base3";
}

std::optional<APMethod> parse_ap_method(std::string_view name) {
  if (name == "greedy-base3") return APMethod::kGreedyBase3;
  if (name == "behrend") return APMethod::kBehrend;
  return std::nullopt;
}

std::optional<std::array<std::uint64_t, 3>> find_three_term_progression(
    std::span<const std::uint64_t> sorted) {
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    for (std::size_t k = i + 2; k < sorted.size(); ++k) {
      std::uint64_t sum = sorted[i] + sorted[k];
      if (sum % 2 != 0) continue;
      std::uint64_t mid = sum / 2;
      if (std::binary_search(sorted.begin() + i + 1, sorted.begin() + k, mid)) {
        return std::array<std::uint64_t, 3>{sorted[i], mid, sorted[k]};
      }
    }
  }
  return std::nullopt;
}

APFreeSet ap_free_set(APMethod method, std::uint64_t limit) {
  if (limit == 0) throw ParameterError("ap_free_set: limit must be >= 1");
  APFreeSet set;
  set.limit = limit;
  set.requested = method;
  set.used = method;
  if (method == APMethod::kBehrend) {
    if (limit >= kBehrendMinLimit) set.elements = behrend_layer(limit);
    if (set.elements.empty()) {
      set.used = APMethod::kGreedyBase3;
      set.fell_back = true;
    }
  }
  if (set.used == APMethod::kGreedyBase3) set.elements = greedy_base3(limit);

  if (limit <= kVerifyLimit) {
    if (auto ap = find_three_term_progression(set.elements)) {
      throw std::logic_error("ap_free_set produced progression " +
                             std::to_string((*ap)[0]) + "," +
                             std::to_string((*ap)[1]) + "," +
                             std::to_string((*ap)[2]));
    }
  }
  return set;
}

}  // namespace rsgraph

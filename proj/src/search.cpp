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

#include "rsgraph/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "rsgraph/bounds.hpp"
#include "rsgraph/error.hpp"
#include "rsgraph/verify.hpp"

namespace rsgraph {
namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kMaxVertices = 32;
constexpr std::size_t kMaxMatchings = 64;
constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ParameterError("invalid budget value '" + std::string(text) + "'");
  }
  return value;
}

MatchingDecomposition certified(std::size_t n, std::vector<Matching> matchings,
                                std::size_t r) {
  std::vector<Edge> edges;
  for (Matching& m : matchings) {
    std::sort(m.begin(), m.end());
    edges.insert(edges.end(), m.begin(), m.end());
  }
  MatchingDecomposition dec(Graph(n, std::move(edges)), std::move(matchings), r);
  if (!verify_decomposition(dec).pass()) {
    throw std::logic_error("search produced a certificate that does not verify");
  }
  return dec;
}

// Shared between the workers of one exists_rs call.
struct SharedSearch {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  std::uint64_t max_nodes = 0;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  std::atomic<std::size_t> best_sat{kNoBranch};
};

// Partial decomposition on at most 32 vertices and 64 matchings. adj is the
// union of the matchings placed so far, vertex_set[j] is V_j and
// incident[v] is A_v.
struct PartialDecomposition {
  std::size_t n = 0;
  std::size_t r = 0;
  std::size_t t = 0;
  std::array<std::uint32_t, kMaxVertices> adj{};
  std::array<std::uint32_t, kMaxVertices> degree{};
  std::array<std::uint64_t, kMaxVertices> incident{};
  std::array<std::uint32_t, kMaxMatchings> vertex_set{};
  std::vector<Matching> matchings;

  static std::uint32_t bit(std::size_t v) { return std::uint32_t{1} << v; }

  // All pruning rules for adding (u, v), u < v, to matching j.
  bool can_place(std::size_t j, Vertex u, Vertex v) const {
    const std::uint32_t vj = vertex_set[j];
    if ((vj & (bit(u) | bit(v))) != 0) return false;
    if ((adj[u] & bit(v)) != 0) return false;
    // Both endpoints already in some V_i: the new edge would lie inside V_i.
    if ((incident[u] & incident[v]) != 0) return false;
    // A graph edge from u or v into V_j would lie inside the grown V_j.
    if (((adj[u] | adj[v]) & vj) != 0) return false;
    // Degree-sum bound d_x + d_y <= t + 1 on every edge at u or v.
    const std::size_t du = degree[u] + 1;
    const std::size_t dv = degree[v] + 1;
    if (du + dv > t + 1) return false;
    for (std::uint32_t m = adj[u]; m != 0; m &= m - 1) {
      if (du + degree[std::countr_zero(m)] > t + 1) return false;
    }
    for (std::uint32_t m = adj[v]; m != 0; m &= m - 1) {
      if (dv + degree[std::countr_zero(m)] > t + 1) return false;
    }
    // |V_i ∩ V_j| <= r against every earlier matching.
    const std::uint32_t grown = vj | bit(u) | bit(v);
    for (std::size_t i = 0; i < j; ++i) {
      if (static_cast<std::size_t>(std::popcount(vertex_set[i] & grown)) > r) {
        return false;
      }
    }
    return true;
  }

  void place(std::size_t j, Vertex u, Vertex v) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
    ++degree[u];
    ++degree[v];
    incident[u] |= std::uint64_t{1} << j;
    incident[v] |= std::uint64_t{1} << j;
    vertex_set[j] |= bit(u) | bit(v);
    matchings[j].emplace_back(u, v);
  }

  void unplace(std::size_t j, Vertex u, Vertex v) {
    adj[u] &= ~bit(v);
    adj[v] &= ~bit(u);
    --degree[u];
    --degree[v];
    incident[u] &= ~(std::uint64_t{1} << j);
    incident[v] &= ~(std::uint64_t{1} << j);
    vertex_set[j] &= ~(bit(u) | bit(v));
    matchings[j].pop_back();
  }

  // Edges of matching j are placed in increasing order; its first edge must
  // exceed the first edge of matching j - 1.
  Edge lower_bound(std::size_t j) const {
    return matchings[j].empty() ? matchings[j - 1].front() : matchings[j].back();
  }
};

class Explorer {
 public:
  Explorer(SharedSearch& shared, std::size_t branch)
      : shared_(shared), branch_(branch) {}

  bool aborted() const { return aborted_; }

  // Depth-first completion of the partial decomposition from matching j
  // with c edges already placed in it.
  bool extend(PartialDecomposition& p, std::size_t j, std::size_t c) {
    if (c == p.r) {
      if (j + 1 == p.t) return true;
      return extend(p, j + 1, 0);
    }
    const std::uint32_t vj = p.vertex_set[j];
    const Edge lo = p.lower_bound(j);
    const std::size_t still_needed = 2 * (p.r - c);
    for (Vertex u = lo.u; u < p.n; ++u) {
      if ((vj >> u) & 1U) continue;
      // Later edges of this matching use only vertices above u.
      std::uint32_t above = (u + 1 >= 32) ? 0 : ~((std::uint32_t{2} << u) - 1);
      if (p.n < 32) above &= (std::uint32_t{1} << p.n) - 1;
      if (static_cast<std::size_t>(std::popcount(above & ~vj)) + 1 < still_needed) {
        break;
      }
      for (Vertex v = (u == lo.u ? lo.v + 1 : u + 1); v < p.n; ++v) {
        if (!p.can_place(j, u, v)) continue;
        if (!count_node()) return false;
        p.place(j, u, v);
        bool found = extend(p, j, c + 1);
        if (found) return true;
        p.unplace(j, u, v);
        if (aborted_) return false;
      }
    }
    return false;
  }

  bool count_node() {
    std::uint64_t total = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > shared_.max_nodes) {
      shared_.out_of_budget = true;
    } else if ((total & 1023U) == 0 && Clock::now() > shared_.deadline) {
      shared_.out_of_budget = true;
    }
    if (shared_.out_of_budget.load(std::memory_order_relaxed) ||
        shared_.best_sat.load(std::memory_order_relaxed) < branch_) {
      aborted_ = true;
    }
    return !aborted_;
  }

 private:
  SharedSearch& shared_;
  std::size_t branch_;
  bool aborted_ = false;
};

void lower_best(std::atomic<std::size_t>& best, std::size_t value) {
  std::size_t current = best.load();
  while (value < current && !best.compare_exchange_weak(current, value)) {
  }
}

}  // namespace

std::string_view to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::kSat: return "SAT";
    case Verdict::kUnsat: return "UNSAT";
    case Verdict::kIndeterminate: return "INDETERMINATE";
  }
  return "unknown";
}

SearchBudget SearchBudget::parse(std::string_view text) {
  SearchBudget budget;
  auto colon = text.find(':');
  budget.max_nodes = parse_u64(text.substr(0, colon));
  if (colon != std::string_view::npos) {
    budget.max_time = std::chrono::seconds(parse_u64(text.substr(colon + 1)));
  }
  return budget;
}

SearchBudget SearchBudget::from_environment() {
  const char* env = std::getenv("RSG_DEFAULT_BUDGET");
  if (env == nullptr || *env == '\0') return {};
  return parse(env);
}

SearchOutcome exists_rs(std::size_t n, std::size_t r, std::size_t t,
                        const SearchOptions& options) {
  if (2 * r > n) {
    throw ParameterError("impossible parameters: 2r = " + std::to_string(2 * r) +
                         " > n = " + std::to_string(n));
  }
  if (n > kMaxVertices) throw ParameterError("exists_rs supports n <= 32");
  if (t > kMaxMatchings) throw ParameterError("exists_rs supports t <= 64");

  const auto start = Clock::now();
  SearchOutcome out;
  auto finish = [&](Verdict verdict) {
    out.verdict = verdict;
    out.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
  };

  if (t == 0 || r == 0) {
    out.certificate = certified(n, std::vector<Matching>(t), r);
    out.note = "vacuous decomposition";
    return finish(Verdict::kSat);
  }
  if (options.max_r_shortcut &&
      Rational(static_cast<std::int64_t>(r)) > max_r(n, t)) {
    out.shortcut_fired = true;
    out.note = "r = " + std::to_string(r) + " > max r = " + to_string(max_r(n, t));
    return finish(Verdict::kUnsat);
  }

  PartialDecomposition root;
  root.n = n;
  root.r = r;
  root.t = t;
  root.matchings.assign(t, {});
  for (std::size_t e = 0; e < r; ++e) {
    root.place(0, static_cast<Vertex>(2 * e), static_cast<Vertex>(2 * e + 1));
  }
  if (t == 1) {
    out.certificate = certified(n, root.matchings, r);
    return finish(Verdict::kSat);
  }

  // Top-level branches: every admissible first edge of M_2.
  std::vector<Edge> branches;
  const Edge lo = root.matchings[0].front();
  for (Vertex u = lo.u; u < n; ++u) {
    for (Vertex v = (u == lo.u ? lo.v + 1 : u + 1); v < n; ++v) {
      if (root.can_place(1, u, v)) branches.emplace_back(u, v);
    }
  }

  SharedSearch shared;
  shared.n = n;
  shared.r = r;
  shared.t = t;
  shared.max_nodes = options.budget.max_nodes;
  shared.deadline = start + options.budget.max_time;

  std::atomic<std::size_t> next_branch{0};
  std::vector<std::optional<std::vector<Matching>>> solutions(branches.size());
  std::vector<char> branch_aborted(branches.size(), 0);

  auto worker = [&] {
    for (;;) {
      std::size_t b = next_branch.fetch_add(1);
      if (b >= branches.size() || b > shared.best_sat.load()) return;
      if (shared.out_of_budget.load()) {
        branch_aborted[b] = 1;
        continue;
      }
      PartialDecomposition p = root;
      Explorer explorer(shared, b);
      if (!explorer.count_node()) {
        branch_aborted[b] = 1;
        continue;
      }
      p.place(1, branches[b].u, branches[b].v);
      if (explorer.extend(p, 1, 1)) {
        solutions[b] = p.matchings;
        lower_best(shared.best_sat, b);
      } else if (explorer.aborted()) {
        branch_aborted[b] = 1;
      }
    }
  };

  const unsigned jobs = std::max(1u, options.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < jobs; ++i) pool.emplace_back(worker);
  }

  out.nodes_explored = std::min(shared.nodes.load(), shared.max_nodes);
  if (std::size_t b = shared.best_sat.load(); b != kNoBranch) {
    out.certificate = certified(n, std::move(*solutions[b]), r);
    return finish(Verdict::kSat);
  }
  bool any_aborted = shared.out_of_budget.load() ||
                     std::any_of(branch_aborted.begin(), branch_aborted.end(),
                                 [](char c) { return c != 0; });
  if (any_aborted) {
    out.note = "budget exhausted";
    return finish(Verdict::kIndeterminate);
  }
  return finish(Verdict::kUnsat);
}

namespace {

// Exact cover / maximum packing over the induced matchings of a fixed graph.
class PackingSearch {
 public:
  PackingSearch(const Graph& g, std::size_t r, const SearchBudget& budget,
                Clock::time_point start)
      : g_(g), r_(r), max_nodes_(budget.max_nodes),
        deadline_(start + budget.max_time) {}

  std::uint64_t nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }

  // All induced matchings of size r, as sorted edge-index lists.
  void enumerate_candidates() {
    used_.assign(g_.num_vertices(), 0);
    touch_.assign(g_.num_vertices(), 0);
    std::vector<std::size_t> current;
    enumerate_from(0, current);
    containing_.assign(g_.num_edges(), {});
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      for (std::size_t e : candidates_[c]) containing_[e].push_back(c);
    }
  }

  std::size_t num_candidates() const { return candidates_.size(); }

  bool exact_cover() {
    covered_.assign(g_.num_edges(), 0);
    chosen_.clear();
    return cover_rest(g_.num_edges());
  }

  void maximize() {
    covered_.assign(g_.num_edges(), 0);
    skipped_.assign(g_.num_edges(), 0);
    chosen_.clear();
    best_.clear();
    pack(g_.num_edges());
  }

  std::vector<Matching> to_matchings(const std::vector<std::size_t>& chosen) const {
    std::vector<Matching> out;
    for (std::size_t c : chosen) {
      Matching m;
      for (std::size_t e : candidates_[c]) m.push_back(g_.edges()[e]);
      out.push_back(std::move(m));
    }
    return out;
  }

  const std::vector<std::size_t>& chosen() const { return chosen_; }
  const std::vector<std::size_t>& best() const { return best_; }

 private:
  bool tick() {
    ++nodes_;
    if (nodes_ > max_nodes_ ||
        ((nodes_ & 1023U) == 0 && Clock::now() > deadline_)) {
      aborted_ = true;
    }
    return !aborted_;
  }

  void enumerate_from(std::size_t first, std::vector<std::size_t>& current) {
    if (current.size() == r_) {
      candidates_.push_back(current);
      return;
    }
    for (std::size_t idx = first; idx < g_.num_edges(); ++idx) {
      const Edge& e = g_.edges()[idx];
      if (used_[e.u] || used_[e.v] || touch_[e.u] || touch_[e.v]) continue;
      if (!tick()) return;
      mark(e, +1);
      current.push_back(idx);
      enumerate_from(idx + 1, current);
      current.pop_back();
      mark(e, -1);
      if (aborted_) return;
    }
  }

  void mark(const Edge& e, int delta) {
    used_[e.u] = delta > 0;
    used_[e.v] = delta > 0;
    for (Vertex x : {e.u, e.v}) {
      for (Vertex y : g_.neighbors(x)) touch_[y] += delta;
    }
  }

  bool viable(std::size_t c) const {
    return std::none_of(candidates_[c].begin(), candidates_[c].end(),
                        [&](std::size_t e) { return covered_[e] != 0; });
  }

  void set_cover(std::size_t c, char value) {
    for (std::size_t e : candidates_[c]) covered_[e] = value;
  }

  bool cover_rest(std::size_t uncovered) {
    if (uncovered == 0) return true;
    // Branch on the uncovered edge with the fewest viable candidates.
    std::size_t pick = g_.num_edges();
    std::size_t fewest = std::numeric_limits<std::size_t>::max();
    for (std::size_t e = 0; e < g_.num_edges(); ++e) {
      if (covered_[e]) continue;
      std::size_t options = 0;
      for (std::size_t c : containing_[e]) options += viable(c) ? 1 : 0;
      if (options < fewest) {
        fewest = options;
        pick = e;
        if (options == 0) return false;
      }
    }
    for (std::size_t c : containing_[pick]) {
      if (!viable(c)) continue;
      if (!tick()) return false;
      set_cover(c, 1);
      chosen_.push_back(c);
      if (cover_rest(uncovered - r_)) return true;
      chosen_.pop_back();
      set_cover(c, 0);
      if (aborted_) return false;
    }
    return false;
  }

  // open = edges neither covered nor skipped.
  void pack(std::size_t open) {
    if (chosen_.size() > best_.size()) best_ = chosen_;
    if (chosen_.size() + open / r_ <= best_.size()) return;
    std::size_t pick = 0;
    while (pick < g_.num_edges() && (covered_[pick] || skipped_[pick])) ++pick;
    if (pick == g_.num_edges()) return;
    for (std::size_t c : containing_[pick]) {
      if (!viable(c)) continue;
      if (!tick()) return;
      std::size_t newly = 0;
      for (std::size_t e : candidates_[c]) newly += skipped_[e] ? 0 : 1;
      if (newly != r_) continue;
      set_cover(c, 1);
      chosen_.push_back(c);
      pack(open - r_);
      chosen_.pop_back();
      set_cover(c, 0);
      if (aborted_) return;
    }
    if (!tick()) return;
    skipped_[pick] = 1;
    pack(open - 1);
    skipped_[pick] = 0;
  }

  const Graph& g_;
  std::size_t r_;
  std::uint64_t max_nodes_;
  Clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;

  std::vector<char> used_;
  std::vector<int> touch_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::vector<std::size_t>> containing_;
  std::vector<char> covered_;
  std::vector<char> skipped_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
};

}  // namespace

SearchOutcome max_t_on_graph(const Graph& g, std::size_t r, bool exact_cover,
                             const SearchOptions& options) {
  if (r == 0) throw ParameterError("max_t_on_graph: r must be >= 1");
  if (r > g.num_edges()) {
    throw ParameterError("max_t_on_graph: r exceeds the number of edges");
  }
  if (exact_cover && g.num_edges() % r != 0) {
    throw ParameterError("max_t_on_graph: r = " + std::to_string(r) +
                         " does not divide |E| = " + std::to_string(g.num_edges()));
  }
  const auto start = Clock::now();
  SearchOutcome out;
  auto finish = [&](Verdict verdict, const PackingSearch& search) {
    out.verdict = verdict;
    out.nodes_explored = search.nodes();
    out.wall_time =
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return out;
  };

  PackingSearch search(g, r, options.budget, start);
  search.enumerate_candidates();
  if (search.aborted()) {
    out.note = "budget exhausted while enumerating induced matchings";
    return finish(Verdict::kIndeterminate, search);
  }
  out.note = std::to_string(search.num_candidates()) + " induced matchings of size " +
             std::to_string(r);

  auto certificate_for = [&](const std::vector<std::size_t>& chosen) {
    std::vector<Matching> matchings = search.to_matchings(chosen);
    return certified(g.num_vertices(), std::move(matchings), r);
  };

  if (exact_cover) {
    bool found = search.exact_cover();
    if (found) {
      out.best_t = search.chosen().size();
      out.certificate = certificate_for(search.chosen());
      return finish(Verdict::kSat, search);
    }
    return finish(search.aborted() ? Verdict::kIndeterminate : Verdict::kUnsat, search);
  }

  search.maximize();
  out.best_t = search.best().size();
  if (search.aborted()) return finish(Verdict::kIndeterminate, search);
  out.certificate = certificate_for(search.best());
  return finish(Verdict::kSat, search);
}

}  // namespace rsgraph

// Copyright 2026 The rstp Authors
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

// Brute-force ground truth. Nothing here calls into the solver, the pruning
// code or the shared MST routines: it carries its own tiny Kruskal so that
// agreement between the two is evidence rather than tautology.

#ifndef RSTP_ORACLE_HPP_
#define RSTP_ORACLE_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "rstp/graph.hpp"

namespace rstp::oracle {

inline constexpr std::uint64_t kDefaultTreeBudget = 1'000'000;
inline constexpr std::size_t kMaxScenarioEdges = 12;

namespace detail {

// Plain forest of parent pointers, no balancing.
struct Forest {
  explicit Forest(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::size_t root(std::size_t x) const {
    while (up[x] != x) x = up[x];
    return x;
  }
  bool join(std::size_t a, std::size_t b) {
    a = root(a);
    b = root(b);
    if (a == b) return false;
    up[b] = a;
    return true;
  }
  std::vector<std::size_t> up;
};

// MST cost under `costs`; `forced` (if any) is taken first. Returns the
// largest Cost value if no spanning tree exists.
inline Cost mst_cost(const IntervalGraph& g, const std::vector<Cost>& costs,
                     EdgeId forced = kNoEdge) {
  std::vector<EdgeId> order(g.edge_count());
  std::iota(order.begin(), order.end(), EdgeId{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](EdgeId a, EdgeId b) { return costs[a] < costs[b]; });
  Forest f(g.vertex_count());
  Cost total = 0;
  std::size_t used = 0;
  if (forced != kNoEdge) {
    f.join(g.edge(forced).u, g.edge(forced).v);
    total += costs[forced];
    ++used;
  }
  for (EdgeId e : order) {
    if (f.join(g.edge(e).u, g.edge(e).v)) {
      total += costs[e];
      ++used;
    }
  }
  if (used + 1 != g.vertex_count()) return std::numeric_limits<Cost>::max();
  return total;
}

inline Cost deviation(const IntervalGraph& g, std::span<const EdgeId> tree) {
  std::vector<Cost> costs(g.edge_count());
  for (EdgeId e = 0; e < costs.size(); ++e) costs[e] = g.edge(e).low;
  Cost tree_cost = 0;
  for (EdgeId e : tree) {
    costs[e] = g.edge(e).high;
    tree_cost += costs[e];
  }
  return tree_cost - mst_cost(g, costs);
}

}  // namespace detail

// Kirchhoff's matrix-tree count: determinant of the reduced Laplacian by
// Gaussian elimination with partial pivoting. Exact after rounding only for
// counts well below 2^53.
inline long double kirchhoff_tree_count(const IntervalGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1.0L;
  const std::size_t k = n - 1;
  std::vector<long double> a(k * k, 0.0L);
  auto at = [&](std::size_t r, std::size_t c) -> long double& {
    return a[r * k + c];
  };
  for (const auto& e : g.edges()) {
    // Row/column of vertex 0 are dropped.
    if (e.u > 0) at(e.u - 1, e.u - 1) += 1;
    if (e.v > 0) at(e.v - 1, e.v - 1) += 1;
    if (e.u > 0 && e.v > 0) {
      at(e.u - 1, e.v - 1) -= 1;
      at(e.v - 1, e.u - 1) -= 1;
    }
  }
  long double det = 1.0L;
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < k; ++r) {
      if (std::fabs(at(r, col)) > std::fabs(at(pivot, col))) pivot = r;
    }
    if (at(pivot, col) == 0.0L) return 0.0L;
    if (pivot != col) {
      for (std::size_t c = 0; c < k; ++c) std::swap(at(pivot, c), at(col, c));
      det = -det;
    }
    det *= at(col, col);
    for (std::size_t r = col + 1; r < k; ++r) {
      const long double factor = at(r, col) / at(col, col);
      for (std::size_t c = col; c < k; ++c) at(r, c) -= factor * at(col, c);
    }
  }
  return det;
}

// Calls `visit` with the sorted edge ids of every spanning tree of g that
// contains all of `forced` and none of `excluded`, in lexicographic order.
// Refuses (BudgetExceeded) up front when the graph has more than `budget`
// spanning trees.
inline std::uint64_t for_each_spanning_tree(
    const IntervalGraph& g,
    const std::function<void(std::span<const EdgeId>)>& visit,
    std::uint64_t budget = kDefaultTreeBudget,
    std::span<const EdgeId> forced = {}, std::span<const EdgeId> excluded = {}) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const long double total = kirchhoff_tree_count(g);
  if (total > static_cast<long double>(budget) + 0.5L) {
    throw BudgetExceeded("graph has about " + std::to_string(std::llround(
                             std::min(total, 9e18L))) +
                         " spanning trees, budget is " + std::to_string(budget));
  }
  if (n == 0) return 0;
  std::vector<int> mode(m, 0);  // 1 forced, -1 excluded
  for (EdgeId e : forced) mode.at(e) = 1;
  for (EdgeId e : excluded) mode.at(e) = -1;

  std::vector<EdgeId> chosen;
  std::uint64_t count = 0;

  // Can the chosen edges plus the non-excluded edges from `from` on still
  // span the graph?
  auto completable = [&](std::size_t from) {
    detail::Forest f(n);
    std::size_t joins = 0;
    for (EdgeId e : chosen) joins += f.join(g.edge(e).u, g.edge(e).v);
    for (EdgeId e = from; e < m; ++e) {
      if (mode[e] != -1) joins += f.join(g.edge(e).u, g.edge(e).v);
    }
    return joins + 1 == n;
  };
  auto acyclic_with = [&](EdgeId extra) {
    detail::Forest f(n);
    for (EdgeId e : chosen) f.join(g.edge(e).u, g.edge(e).v);
    return f.join(g.edge(extra).u, g.edge(extra).v);
  };

  std::function<void(EdgeId)> recurse = [&](EdgeId i) {
    if (chosen.size() + 1 == n) {
      for (EdgeId e = i; e < m; ++e) {
        if (mode[e] == 1) return;
      }
      if (++count > budget) {
        throw BudgetExceeded("spanning tree budget exceeded");
      }
      visit(chosen);
      return;
    }
    if (i == m) return;
    // Include first: yields trees in lexicographic order of their id tuples.
    if (mode[i] != -1 && acyclic_with(i)) {
      chosen.push_back(i);
      recurse(i + 1);
      chosen.pop_back();
    }
    if (mode[i] != 1 && completable(i + 1)) recurse(i + 1);
  };
  if (n == 1) {
    visit(chosen);
    return 1;
  }
  if (completable(0)) recurse(0);
  return count;
}

inline std::vector<std::vector<EdgeId>> enumerate_spanning_trees(
    const IntervalGraph& g, std::uint64_t budget = kDefaultTreeBudget) {
  std::vector<std::vector<EdgeId>> out;
  for_each_spanning_tree(
      g, [&](std::span<const EdgeId> t) { out.emplace_back(t.begin(), t.end()); },
      budget);
  return out;
}

struct OracleResult {
  Cost optimum = std::numeric_limits<Cost>::max();
  std::vector<std::vector<EdgeId>> optimal_trees;
  std::uint64_t tree_count = 0;
};

// Minimum robust deviation over every spanning tree (optionally restricted
// to trees containing `forced` and avoiding `excluded`). An empty tree set
// leaves optimum at the largest Cost value.
inline OracleResult oracle_min_deviation(
    const IntervalGraph& g, std::uint64_t budget = kDefaultTreeBudget,
    std::span<const EdgeId> forced = {}, std::span<const EdgeId> excluded = {}) {
  OracleResult r;
  r.tree_count = for_each_spanning_tree(
      g,
      [&](std::span<const EdgeId> t) {
        const Cost d = detail::deviation(g, t);
        if (d < r.optimum) {
          r.optimum = d;
          r.optimal_trees.clear();
        }
        if (d == r.optimum) r.optimal_trees.emplace_back(t.begin(), t.end());
      },
      budget, forced, excluded);
  return r;
}

// max over all 2^m extreme scenarios s of c_T^s - c_{MST^s}.
inline Cost oracle_deviation_by_scenarios(std::span<const EdgeId> tree,
                                          const IntervalGraph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMaxScenarioEdges) {
    throw BudgetExceeded("scenario enumeration limited to " +
                         std::to_string(kMaxScenarioEdges) + " edges");
  }
  Cost best = std::numeric_limits<Cost>::min();
  std::vector<Cost> costs(m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (EdgeId e = 0; e < m; ++e) {
      costs[e] = (mask >> e) & 1u ? g.edge(e).high : g.edge(e).low;
    }
    Cost tree_cost = 0;
    for (EdgeId e : tree) tree_cost += costs[e];
    best = std::max(best, tree_cost - detail::mst_cost(g, costs));
  }
  return best;
}

// e at its lower bound, all others at their upper bound: is there an MST
// through e?
inline bool oracle_is_weak(EdgeId edge, const IntervalGraph& g) {
  std::vector<Cost> costs(g.edge_count());
  for (EdgeId e = 0; e < costs.size(); ++e) costs[e] = g.edge(e).high;
  costs[edge] = g.edge(edge).low;
  return detail::mst_cost(g, costs, edge) == detail::mst_cost(g, costs);
}

// e at its upper bound, all others at their lower bound.
inline bool oracle_is_strong(EdgeId edge, const IntervalGraph& g) {
  std::vector<Cost> costs(g.edge_count());
  for (EdgeId e = 0; e < costs.size(); ++e) costs[e] = g.edge(e).low;
  costs[edge] = g.edge(edge).high;
  return detail::mst_cost(g, costs, edge) == detail::mst_cost(g, costs);
}

// Robust deviation of one tree by the oracle's own MST.
inline Cost oracle_tree_deviation(std::span<const EdgeId> tree,
                                  const IntervalGraph& g) {
  return detail::deviation(g, tree);
}

}  // namespace rstp::oracle

#endif  // RSTP_ORACLE_HPP_

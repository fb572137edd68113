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

// Minimum spanning trees over one extreme scenario of an IntervalGraph.
//
// Ties between equal-cost edges are always broken towards the lower edge id,
// so (cost, id) is a strict total order and the MST is unique. Prim and
// Kruskal therefore return the same edge set on the same input.

#ifndef RSTP_MST_HPP_
#define RSTP_MST_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <span>
#include <tuple>
#include <vector>

#include "rstp/graph.hpp"

namespace rstp {

enum class EdgeState : std::uint8_t { kFree, kSelected, kRejected };

struct MstResult {
  std::vector<EdgeId> edges;  // ascending ids
  Cost cost = 0;
};

// Kruskal seeded with the selected edges; rejected edges are skipped.
// Returns nullopt when no spanning tree respects the states. Throws
// std::invalid_argument if the selected edges contain a cycle.
inline std::optional<MstResult> kruskal(const IntervalGraph& g,
                                        std::span<const Cost> costs,
                                        std::span<const EdgeState> states) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  UnionFind uf(n);
  MstResult out;
  out.edges.reserve(n > 0 ? n - 1 : 0);
  std::vector<EdgeId> order;
  order.reserve(m);
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeState st = states.empty() ? EdgeState::kFree : states[e];
    if (st == EdgeState::kSelected) {
      if (!uf.unite(g.edge(e).u, g.edge(e).v)) {
        throw std::invalid_argument("selected edges contain a cycle");
      }
      out.edges.push_back(e);
      out.cost += costs[e];
    } else if (st == EdgeState::kFree) {
      order.push_back(e);
    }
  }
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    return std::tie(costs[a], a) < std::tie(costs[b], b);
  });
  for (EdgeId e : order) {
    if (uf.component_count() == 1) break;
    if (uf.unite(g.edge(e).u, g.edge(e).v)) {
      out.edges.push_back(e);
      out.cost += costs[e];
    }
  }
  if (uf.component_count() != 1) return std::nullopt;
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

// Prim from vertex 0 over a lazy heap. When an edge (u, v) with u in the tree
// joins v, level(v) = level(u) + 1 and parent(v) = u. Throws InfeasibleError
// if the graph is disconnected.
inline SpanningTree prim_tree(const IntervalGraph& g,
                              std::span<const Cost> costs) {
  const std::size_t n = g.vertex_count();
  if (n == 0) throw InfeasibleError("no spanning tree exists: empty graph");
  SpanningTree t;
  t.init(n);
  using Item = std::pair<Cost, EdgeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<bool> in_tree(n, false);
  auto absorb = [&](VertexId x) {
    in_tree[x] = true;
    for (EdgeId e : g.incident(x)) {
      if (!in_tree[g.edge(e).other(x)]) heap.emplace(costs[e], e);
    }
  };
  absorb(0);
  std::size_t joined = 1;
  while (!heap.empty() && joined < n) {
    const auto [c, e] = heap.top();
    heap.pop();
    const auto& ed = g.edge(e);
    VertexId inside = ed.u;
    VertexId outside = ed.v;
    if (in_tree[outside] && !in_tree[inside]) std::swap(inside, outside);
    if (in_tree[outside]) continue;
    t.attach(outside, inside, e, c);
    t.edges_.push_back(e);
    absorb(outside);
    ++joined;
  }
  if (joined != n) {
    throw InfeasibleError("no spanning tree exists: graph is disconnected");
  }
  std::sort(t.edges_.begin(), t.edges_.end());
  return t;
}

inline Cost edge_set_cost(std::span<const EdgeId> edges,
                          std::span<const Cost> costs) {
  Cost total = 0;
  for (EdgeId e : edges) total += costs[e];
  return total;
}

inline Cost tree_cost(const SpanningTree& tree, const ExtremeScenario& scenario,
                      const IntervalGraph& g) {
  Cost total = 0;
  for (EdgeId e : tree.edges()) total += scenario.cost(g, e);
  return total;
}

// Annotated MST (parent/level/parent cost) under the scenario.
inline SpanningTree minimum_spanning_tree(const IntervalGraph& g,
                                          const ExtremeScenario& scenario) {
  return prim_tree(g, scenario.costs(g));
}

// Minimum-cost tree among those containing every forced edge and no excluded
// edge, or nullopt when no such tree exists.
inline std::optional<SpanningTree> constrained_mst(
    const IntervalGraph& g, std::span<const EdgeId> forced,
    std::span<const EdgeId> excluded, const ExtremeScenario& scenario) {
  std::vector<EdgeState> states(g.edge_count(), EdgeState::kFree);
  for (EdgeId e : excluded) states.at(e) = EdgeState::kRejected;
  for (EdgeId e : forced) {
    if (states.at(e) == EdgeState::kRejected) {
      throw std::invalid_argument("forced and excluded sets overlap");
    }
    states[e] = EdgeState::kSelected;
  }
  const auto costs = scenario.costs(g);
  auto result = kruskal(g, costs, states);
  if (!result) return std::nullopt;
  return SpanningTree::from_edges(g, std::move(result->edges), costs);
}

}  // namespace rstp

#endif  // RSTP_MST_HPP_

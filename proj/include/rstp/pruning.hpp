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

// Edge filtering for the search: weak and strong edge detection, the
// infeasibility rule (cycles, connectivity, optional bridges) and
// suboptimality pruning on the contracted graph G/S - R.

#ifndef RSTP_PRUNING_HPP_
#define RSTP_PRUNING_HPP_

#include <algorithm>
#include <cassert>
#include <optional>
#include <span>
#include <vector>

#include "rstp/configuration.hpp"
#include "rstp/graph.hpp"
#include "rstp/mst.hpp"

namespace rstp {

// n x n memo of path maxima for one rooted tree. Entries are symmetric and
// each unordered pair is written at most once.
class MaxCostCache {
 public:
  explicit MaxCostCache(std::size_t n) : n_(n), table_(n * n) {}

  std::size_t vertex_count() const { return n_; }

  std::optional<Cost> get(VertexId u, VertexId v) const {
    return table_[u * n_ + v];
  }

  void put(VertexId u, VertexId v, Cost c) {
    assert(!table_[u * n_ + v].has_value());
    table_[u * n_ + v] = c;
    table_[v * n_ + u] = c;
    writes_ += (u == v) ? 1 : 2;
  }

  // Number of table entries filled so far.
  std::size_t writes() const { return writes_; }
  // Number of max_cost_path invocations, including recursive ones.
  std::size_t steps() const { return steps_; }

 private:
  friend Cost max_cost_path(VertexId, VertexId, const SpanningTree&,
                            MaxCostCache&);

  std::size_t n_;
  std::vector<std::optional<Cost>> table_;
  std::size_t writes_ = 0;
  std::size_t steps_ = 0;
};

// Largest parent-edge cost on the tree path u..v. Walks up from the deeper
// endpoint, or from both at equal levels, memoizing every intermediate pair.
inline Cost max_cost_path(VertexId u, VertexId v, const SpanningTree& tree,
                          MaxCostCache& cache) {
  ++cache.steps_;
  if (u == v) return 0;
  if (auto hit = cache.get(u, v)) return *hit;
  Cost result;
  if (tree.level(u) < tree.level(v)) {
    result = std::max(tree.parent_edge_cost(v),
                      max_cost_path(u, tree.parent(v), tree, cache));
  } else if (tree.level(u) > tree.level(v)) {
    result = std::max(tree.parent_edge_cost(u),
                      max_cost_path(tree.parent(u), v, tree, cache));
  } else {
    const Cost max_edge =
        std::max(tree.parent_edge_cost(u), tree.parent_edge_cost(v));
    result = std::max(max_edge, max_cost_path(tree.parent(u), tree.parent(v),
                                              tree, cache));
  }
  cache.put(u, v, result);
  return result;
}

struct WeakEdgeReport {
  std::vector<bool> weak;  // indexed by edge id
  std::size_t cache_writes = 0;
  std::size_t steps = 0;
};

// One MST under the all-upper scenario plus one cached path query per
// non-tree edge: e = (u, v) outside T is weak iff low(e) <= MaxCost(u, v).
inline WeakEdgeReport detect_weak_edges(const IntervalGraph& g) {
  WeakEdgeReport report;
  const std::size_t m = g.edge_count();
  report.weak.assign(m, false);
  if (m == 0) return report;
  std::vector<Cost> upper(m);
  for (EdgeId e = 0; e < m; ++e) upper[e] = g.edge(e).high;
  const SpanningTree tree = prim_tree(g, upper);
  for (EdgeId e : tree.edges()) report.weak[e] = true;
  MaxCostCache cache(g.vertex_count());
  for (EdgeId e = 0; e < m; ++e) {
    if (report.weak[e]) continue;
    const auto& ed = g.edge(e);
    report.weak[e] = ed.low <= max_cost_path(ed.u, ed.v, tree, cache);
  }
  report.cache_writes = cache.writes();
  report.steps = cache.steps();
  return report;
}

inline std::vector<EdgeId> weak_edges(const IntervalGraph& g) {
  const auto report = detect_weak_edges(g);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < report.weak.size(); ++e) {
    if (report.weak[e]) out.push_back(e);
  }
  return out;
}

// e is strong iff some MST uses e when e sits at its upper bound and every
// other edge at its lower bound. One forced and one free MST per edge.
inline std::vector<EdgeId> strong_edges(const IntervalGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<Cost> costs(m);
  for (EdgeId e = 0; e < m; ++e) costs[e] = g.edge(e).low;
  std::vector<EdgeState> states(m, EdgeState::kFree);
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < m; ++e) {
    costs[e] = g.edge(e).high;
    states[e] = EdgeState::kSelected;
    const auto forced = kruskal(g, costs, states);
    const auto best = kruskal(g, costs, {});
    if (!best) throw InfeasibleError("no spanning tree exists");
    if (forced && forced->cost == best->cost) out.push_back(e);
    costs[e] = g.edge(e).low;
    states[e] = EdgeState::kFree;
  }
  return out;
}

// G/S - R: rejected edges removed, selected edges contracted, resulting
// self-loops dropped, parallel edges kept. Each contracted vertex is named
// after the smallest original vertex of its S-component, and contracted
// vertex ids follow that order (so vertex 0 maps to 0).
struct ContractedGraph {
  IntervalGraph graph;
  std::vector<EdgeId> original_edge;  // contracted edge id -> original id
  std::vector<VertexId> vertex_of;    // original vertex -> contracted vertex
};

inline ContractedGraph contract(const Configuration& config,
                                const IntervalGraph& g) {
  const std::size_t n = g.vertex_count();
  UnionFind uf = config.selected_components(g);
  ContractedGraph out;
  out.vertex_of.assign(n, 0);
  std::vector<VertexId> label(n, kNoEdge);
  std::size_t next = 0;
  for (VertexId x = 0; x < n; ++x) {
    const std::size_t r = uf.find(x);
    if (label[r] == kNoEdge) label[r] = next++;
    out.vertex_of[x] = label[r];
  }
  out.graph = IntervalGraph(next);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!config.is_free(e)) continue;
    const auto& ed = g.edge(e);
    const VertexId cu = out.vertex_of[ed.u];
    const VertexId cv = out.vertex_of[ed.v];
    if (cu == cv) continue;
    out.graph.add_edge(cu, cv, ed.low, ed.high);
    out.original_edge.push_back(e);
  }
  return out;
}

// Bridges of a multigraph (parallel edges are never bridges).
inline std::vector<EdgeId> bridges(const IntervalGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::size_t> order(n, 0), low(n, 0);
  std::vector<bool> visited(n, false);
  std::vector<EdgeId> out;
  std::size_t clock = 0;
  struct Frame {
    VertexId vertex;
    EdgeId via;
    std::size_t next;
  };
  for (VertexId start = 0; start < n; ++start) {
    if (visited[start]) continue;
    std::vector<Frame> stack{{start, kNoEdge, 0}};
    visited[start] = true;
    order[start] = low[start] = clock++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto inc = g.incident(f.vertex);
      if (f.next < inc.size()) {
        const EdgeId e = inc[f.next++];
        if (e == f.via) continue;
        const VertexId y = g.edge(e).other(f.vertex);
        if (visited[y]) {
          low[f.vertex] = std::min(low[f.vertex], order[y]);
        } else {
          visited[y] = true;
          order[y] = low[y] = clock++;
          stack.push_back({y, e, 0});
        }
        continue;
      }
      const Frame done = f;
      stack.pop_back();
      if (!stack.empty()) {
        const VertexId p = stack.back().vertex;
        low[p] = std::min(low[p], low[done.vertex]);
        if (low[done.vertex] > order[p]) out.push_back(done.via);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Rejects every free edge that would close a cycle with S, then checks that
// S ∪ L still spans the graph. Returns nullopt for a dead configuration.
// With force_bridges, free bridges of (V, S ∪ L) are moved into S.
inline std::optional<Configuration> prune_infeasible(Configuration config,
                                                     const IntervalGraph& g,
                                                     bool force_bridges = false) {
  UnionFind uf = config.selected_components(g);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (config.is_free(e) && uf.connected(g.edge(e).u, g.edge(e).v)) {
      config.reject(e);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (config.is_free(e)) uf.unite(g.edge(e).u, g.edge(e).v);
  }
  if (uf.component_count() != 1) return std::nullopt;
  if (force_bridges) {
    // A bridge of S ∪ L never closes a cycle with S, so no second cycle pass.
    const ContractedGraph cg = contract(config, g);
    for (EdgeId ce : bridges(cg.graph)) config.select(cg.original_edge[ce]);
  }
  return config;
}

struct SuboptimalPruneStats {
  std::size_t removed = 0;
  std::size_t cache_writes = 0;
};

// Rejects every free edge that is not weak in G/S - R. Expects a
// configuration that survived prune_infeasible.
inline Configuration prune_suboptimal(Configuration config,
                                      const IntervalGraph& g,
                                      SuboptimalPruneStats& stats) {
  const ContractedGraph cg = contract(config, g);
  if (cg.graph.vertex_count() < 2) return config;
  const WeakEdgeReport report = detect_weak_edges(cg.graph);
  stats.cache_writes += report.cache_writes;
  for (EdgeId ce = 0; ce < report.weak.size(); ++ce) {
    if (!report.weak[ce]) {
      config.reject(cg.original_edge[ce]);
      ++stats.removed;
    }
  }
  return config;
}

inline Configuration prune_suboptimal(Configuration config,
                                      const IntervalGraph& g) {
  SuboptimalPruneStats stats;
  return prune_suboptimal(std::move(config), g, stats);
}

}  // namespace rstp

#endif  // RSTP_PRUNING_HPP_

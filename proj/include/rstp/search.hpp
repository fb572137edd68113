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

// Depth-first branch and bound for the minmax-regret spanning tree.
//
// Each node <S, R> with |S| < n-1 is filtered (cycles and connectivity,
// then non-weak edges on G/S - R), bounded with the two-MST lower bound, and
// split on one free edge: the reject child is explored before the accept
// child. A node with |S| = n-1 is a spanning tree and may replace the
// incumbent.

#ifndef RSTP_SEARCH_HPP_
#define RSTP_SEARCH_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rstp/configuration.hpp"
#include "rstp/graph.hpp"
#include "rstp/mst.hpp"
#include "rstp/pruning.hpp"
#include "rstp/robust.hpp"

namespace rstp {

// CSR prunes suboptimal edges at the root only, CSF at every node.
enum class PruneMode { kRoot, kFull };

enum class BranchRule {
  kMaxWidth,  // widest interval, preferring edges of MST^{w(S∪L)}
  kLowestId,  // ablation baseline
};

// Which tree defines the preferred candidates L* for kMaxWidth.
enum class BranchTree {
  kUnconstrained,  // MST^{w(S∪L)}
  kConstrained,    // MST^{w(S∪L)}(S, R)
};

enum class BoundTest {
  kStrict,  // prune when LB >= f*
  kLoose,   // prune only when LB > f*
};

enum class InitialIncumbent {
  kUpperMst,  // robust deviation of the MST under all upper bounds
  kInfinite,
};

struct SolverOptions {
  PruneMode mode = PruneMode::kRoot;
  BranchRule branch = BranchRule::kMaxWidth;
  BranchTree branch_tree = BranchTree::kUnconstrained;
  bool preseed_strong = true;
  bool force_bridges = false;
  BoundTest bound_test = BoundTest::kStrict;
  InitialIncumbent initial = InitialIncumbent::kUpperMst;
};

struct SearchStats {
  std::size_t nodes_visited = 0;
  std::size_t lb_prunes = 0;
  std::size_t infeasible_prunes = 0;
  std::size_t weak_edges_removed = 0;
  std::size_t cache_writes = 0;
  std::size_t incumbent_updates = 0;
  std::size_t strong_edges_preseeded = 0;
  std::size_t max_depth = 0;
};

struct SearchOutcome {
  SpanningTree best_tree;
  DeviationValue best_deviation;
  SearchStats stats;
};

inline std::string_view to_string(PruneMode m) {
  return m == PruneMode::kRoot ? "csr" : "csf";
}
inline std::string_view to_string(BranchRule r) {
  return r == BranchRule::kMaxWidth ? "max-width" : "lowest-id";
}
inline std::string_view to_string(BranchTree t) {
  return t == BranchTree::kUnconstrained ? "unconstrained" : "constrained";
}
inline std::string_view to_string(BoundTest b) {
  return b == BoundTest::kStrict ? "strict" : "loose";
}
inline std::string_view to_string(InitialIncumbent i) {
  return i == InitialIncumbent::kUpperMst ? "upper-mst" : "infinite";
}

namespace detail {

inline EdgeId widest_free_edge(const Configuration& config,
                               const IntervalGraph& g,
                               std::span<const EdgeId> tree_edges) {
  EdgeId best_in = kNoEdge;
  EdgeId best_out = kNoEdge;
  auto wider = [&](EdgeId cand, EdgeId incumbent) {
    return incumbent == kNoEdge ||
           g.edge(cand).width() > g.edge(incumbent).width();
  };
  std::size_t t = 0;
  for (EdgeId e = 0; e < config.edge_count(); ++e) {
    while (t < tree_edges.size() && tree_edges[t] < e) ++t;
    if (!config.is_free(e)) continue;
    const bool in_tree = t < tree_edges.size() && tree_edges[t] == e;
    EdgeId& slot = in_tree ? best_in : best_out;
    if (wider(e, slot)) slot = e;
  }
  return best_in != kNoEdge ? best_in : best_out;
}

inline EdgeId select_edge(const Configuration& config, const IntervalGraph& g,
                          const SolverOptions& options,
                          const MstResult& open_mst) {
  if (config.free_count() == 0) {
    throw std::logic_error("select_edge: no free edge");
  }
  if (options.branch == BranchRule::kLowestId) {
    for (EdgeId e = 0; e < config.edge_count(); ++e) {
      if (config.is_free(e)) return e;
    }
  }
  if (options.branch_tree == BranchTree::kConstrained) {
    const auto costs = config.open_scenario().costs(g);
    const auto constrained = kruskal(g, costs, config.states());
    if (constrained) return widest_free_edge(config, g, constrained->edges);
  }
  return widest_free_edge(config, g, open_mst.edges);
}

}  // namespace detail

// Branching edge for a configuration with at least one free edge. Ties on
// width go to the lowest edge id.
inline EdgeId select_edge(const Configuration& config, const IntervalGraph& g,
                          const SolverOptions& options = {}) {
  const auto costs = config.open_scenario().costs(g);
  const auto open_mst = kruskal(g, costs, {});
  if (!open_mst) throw InfeasibleError("no spanning tree exists");
  return detail::select_edge(config, g, options, *open_mst);
}

class Solver {
 public:
  Solver(const IntervalGraph& g, SolverOptions options)
      : g_(g), options_(options) {}

  SearchOutcome run() {
    const std::size_t n = g_.vertex_count();
    if (n < 2) throw std::invalid_argument("solve: need at least 2 vertices");
    if (!g_.is_connected()) {
      throw InfeasibleError("no spanning tree exists: graph is disconnected");
    }
    outcome_ = SearchOutcome{};
    if (options_.initial == InitialIncumbent::kUpperMst) {
      const auto start = minimum_spanning_tree(
          g_, ExtremeScenario::all_upper(g_.edge_count()));
      best_edges_.assign(start.edges().begin(), start.edges().end());
      outcome_.best_deviation = robust_deviation(start, g_);
    }

    Configuration root(g_.edge_count());
    if (options_.preseed_strong) {
      // Some robust tree contains every strong edge. Equal-valued degenerate
      // intervals can make strong edges cyclic; keep an acyclic prefix.
      UnionFind uf(n);
      for (EdgeId e : strong_edges(g_)) {
        if (uf.unite(g_.edge(e).u, g_.edge(e).v)) {
          root.select(e);
          ++outcome_.stats.strong_edges_preseeded;
        }
      }
    }
    search(std::move(root), 0);

    const auto worst = worst_case_scenario(best_edges_, g_);
    outcome_.best_tree =
        SpanningTree::from_edges(g_, best_edges_, worst.costs(g_));
    return std::move(outcome_);
  }

 private:
  bool bound_prunes(Cost lb) const {
    const auto& f = outcome_.best_deviation;
    return options_.bound_test == BoundTest::kStrict ? f <= lb : f < lb;
  }

  void offer(const Configuration& config) {
    const auto edges = config.selected();
    const DeviationValue dev(robust_deviation_of_edges(edges, g_));
    if (dev < outcome_.best_deviation) {
      outcome_.best_deviation = dev;
      best_edges_ = edges;
      ++outcome_.stats.incumbent_updates;
    }
  }

  void search(Configuration config, std::size_t depth) {
    auto& stats = outcome_.stats;
    ++stats.nodes_visited;
    stats.max_depth = std::max(stats.max_depth, depth);
    const std::size_t tree_size = g_.vertex_count() - 1;
    if (config.selected_count() == tree_size) {
      offer(config);
      return;
    }
    auto pruned = prune_infeasible(std::move(config), g_,
                                   options_.force_bridges);
    if (!pruned) {
      ++stats.infeasible_prunes;
      return;
    }
    config = std::move(*pruned);
    if (config.selected_count() == tree_size) {
      offer(config);
      return;
    }
    if (options_.mode == PruneMode::kFull || depth == 0) {
      SuboptimalPruneStats ps;
      config = prune_suboptimal(std::move(config), g_, ps);
      stats.weak_edges_removed += ps.removed;
      stats.cache_writes += ps.cache_writes;
    }
    const auto bound = evaluate_node(config, g_);
    if (!bound) {
      ++stats.infeasible_prunes;
      return;
    }
    if (bound_prunes(bound->lower_bound())) {
      ++stats.lb_prunes;
      return;
    }
    const EdgeId e =
        detail::select_edge(config, g_, options_, bound->unconstrained);
    Configuration rejected = config;
    rejected.reject(e);
    search(std::move(rejected), depth + 1);
    config.select(e);
    search(std::move(config), depth + 1);
  }

  const IntervalGraph& g_;
  SolverOptions options_;
  SearchOutcome outcome_;
  std::vector<EdgeId> best_edges_;
};

inline SearchOutcome solve(const IntervalGraph& g,
                           const SolverOptions& options = {}) {
  return Solver(g, options).run();
}

}  // namespace rstp

#endif  // RSTP_SEARCH_HPP_

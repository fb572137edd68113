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

#ifndef RSTP_GRAPH_HPP_
#define RSTP_GRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rstp {

// All costs are exact integers; no floating point ever enters the solver.
using Cost = std::int64_t;
using VertexId = std::size_t;
using EdgeId = std::size_t;

inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// Raised when the input graph admits no spanning tree.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised by brute-force routines that refuse to run past their budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Union-find with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns false if a and b were already in the same set.
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --components_;
    return true;
  }

  bool connected(std::size_t a, std::size_t b) { return find(a) == find(b); }
  std::size_t component_count() const { return components_; }
  std::size_t size() const { return parent_.size(); }

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
  std::size_t components_;
};

struct IntervalEdge {
  VertexId u = 0;
  VertexId v = 0;
  Cost low = 0;
  Cost high = 0;

  Cost width() const { return high - low; }
  VertexId other(VertexId x) const { return x == u ? v : u; }

  friend bool operator==(const IntervalEdge&, const IntervalEdge&) = default;
};

// Undirected multigraph with an integer cost interval [low, high] on every
// edge. Edge ids are dense and follow insertion order. Parallel edges are
// accepted (contraction produces them); self-loops are not.
class IntervalGraph {
 public:
  IntervalGraph() = default;
  explicit IntervalGraph(std::size_t vertex_count)
      : vertex_count_(vertex_count), incident_(vertex_count) {}

  EdgeId add_edge(VertexId u, VertexId v, Cost low, Cost high) {
    if (u >= vertex_count_ || v >= vertex_count_) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop");
    if (low < 0) throw std::invalid_argument("negative lower bound");
    if (low > high) throw std::invalid_argument("low > high");
    const EdgeId id = edges_.size();
    edges_.push_back({u, v, low, high});
    incident_[u].push_back(id);
    incident_[v].push_back(id);
    return id;
  }

  std::size_t vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const IntervalEdge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const IntervalEdge> edges() const { return edges_; }
  std::span<const EdgeId> incident(VertexId x) const { return incident_[x]; }

  bool is_connected() const {
    if (vertex_count_ == 0) return false;
    UnionFind uf(vertex_count_);
    for (const auto& e : edges_) uf.unite(e.u, e.v);
    return uf.component_count() == 1;
  }

  friend bool operator==(const IntervalGraph& a, const IntervalGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<IntervalEdge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// A scenario where every edge sits at one of its two bounds. Stored as the
// membership mask of the edges that are at their upper bound.
class ExtremeScenario {
 public:
  ExtremeScenario() = default;

  static ExtremeScenario all_lower(std::size_t edge_count) {
    ExtremeScenario s;
    s.upper_.assign(edge_count, false);
    return s;
  }
  static ExtremeScenario all_upper(std::size_t edge_count) {
    ExtremeScenario s;
    s.upper_.assign(edge_count, true);
    return s;
  }
  static ExtremeScenario with_upper(std::size_t edge_count,
                                    std::span<const EdgeId> upper_edges) {
    ExtremeScenario s = all_lower(edge_count);
    for (EdgeId e : upper_edges) s.upper_.at(e) = true;
    return s;
  }

  std::size_t edge_count() const { return upper_.size(); }
  bool at_upper(EdgeId e) const { return upper_[e]; }
  void set_upper(EdgeId e, bool upper) { upper_[e] = upper; }

  Cost cost(const IntervalGraph& g, EdgeId e) const {
    return upper_[e] ? g.edge(e).high : g.edge(e).low;
  }

  std::vector<Cost> costs(const IntervalGraph& g) const {
    std::vector<Cost> out(g.edge_count());
    for (EdgeId e = 0; e < out.size(); ++e) out[e] = cost(g, e);
    return out;
  }

  std::vector<EdgeId> upper_set() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < upper_.size(); ++e) {
      if (upper_[e]) out.push_back(e);
    }
    return out;
  }

  friend bool operator==(const ExtremeScenario&,
                         const ExtremeScenario&) = default;

 private:
  std::vector<bool> upper_;
};

// Spanning tree rooted at vertex 0. parent(root) == root, level(root) == 0.
// parent_edge_cost holds the cost of the edge to the parent under the
// scenario the tree was built with.
class SpanningTree {
 public:
  SpanningTree() = default;

  // Roots the given edge set at vertex 0. Throws std::invalid_argument if the
  // edges do not form a spanning tree of g.
  static SpanningTree from_edges(const IntervalGraph& g,
                                 std::vector<EdgeId> edges,
                                 std::span<const Cost> costs) {
    const std::size_t n = g.vertex_count();
    if (n == 0 || edges.size() != n - 1) {
      throw std::invalid_argument("edge set has the wrong size for a tree");
    }
    std::sort(edges.begin(), edges.end());
    std::vector<std::vector<EdgeId>> adj(n);
    UnionFind uf(n);
    for (EdgeId e : edges) {
      const auto& ed = g.edge(e);
      if (!uf.unite(ed.u, ed.v)) {
        throw std::invalid_argument("edge set contains a cycle");
      }
      adj[ed.u].push_back(e);
      adj[ed.v].push_back(e);
    }
    SpanningTree t;
    t.init(n);
    std::vector<VertexId> stack{0};
    std::vector<bool> seen(n, false);
    seen[0] = true;
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (EdgeId e : adj[x]) {
        const VertexId y = g.edge(e).other(x);
        if (seen[y]) continue;
        seen[y] = true;
        t.attach(y, x, e, costs[e]);
        stack.push_back(y);
      }
    }
    t.edges_ = std::move(edges);
    return t;
  }

  std::span<const EdgeId> edges() const { return edges_; }
  std::size_t vertex_count() const { return parent_.size(); }
  VertexId root() const { return 0; }
  VertexId parent(VertexId x) const { return parent_[x]; }
  EdgeId parent_edge(VertexId x) const { return parent_edge_[x]; }
  std::size_t level(VertexId x) const { return level_[x]; }
  Cost parent_edge_cost(VertexId x) const { return parent_cost_[x]; }

  bool contains(EdgeId e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

 private:
  friend SpanningTree prim_tree(const IntervalGraph&, std::span<const Cost>);

  void init(std::size_t n) {
    parent_.resize(n);
    std::iota(parent_.begin(), parent_.end(), VertexId{0});
    parent_edge_.assign(n, kNoEdge);
    level_.assign(n, 0);
    parent_cost_.assign(n, 0);
  }

  void attach(VertexId child, VertexId parent, EdgeId e, Cost c) {
    parent_[child] = parent;
    parent_edge_[child] = e;
    level_[child] = level_[parent] + 1;
    parent_cost_[child] = c;
  }

  std::vector<EdgeId> edges_;
  std::vector<VertexId> parent_;
  std::vector<EdgeId> parent_edge_;
  std::vector<std::size_t> level_;
  std::vector<Cost> parent_cost_;
};

}  // namespace rstp

#endif  // RSTP_GRAPH_HPP_

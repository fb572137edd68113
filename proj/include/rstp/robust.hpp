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

// Objective layer: worst-case scenarios, robust deviation (regret) of a tree
// and the two-MST lower bound of a search configuration.

#ifndef RSTP_ROBUST_HPP_
#define RSTP_ROBUST_HPP_

#include <compare>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rstp/configuration.hpp"
#include "rstp/graph.hpp"
#include "rstp/mst.hpp"

namespace rstp {

// Regret of a tree, or the infinite sentinel used before any incumbent
// exists. Infinite compares greater than every finite value.
class DeviationValue {
 public:
  constexpr DeviationValue() = default;  // infinite
  constexpr explicit DeviationValue(Cost v) : value_(v) {}

  static constexpr DeviationValue infinite() { return DeviationValue(); }

  constexpr bool is_infinite() const { return !value_.has_value(); }
  constexpr Cost value() const { return value_.value(); }

  friend constexpr std::strong_ordering operator<=>(const DeviationValue& a,
                                                    const DeviationValue& b) {
    if (a.is_infinite() || b.is_infinite()) {
      return a.is_infinite() <=> b.is_infinite();
    }
    return *a.value_ <=> *b.value_;
  }
  friend constexpr bool operator==(const DeviationValue& a,
                                   const DeviationValue& b) {
    return (a <=> b) == 0;
  }

  friend constexpr std::strong_ordering operator<=>(const DeviationValue& a,
                                                    Cost b) {
    return a <=> DeviationValue(b);
  }
  friend constexpr bool operator==(const DeviationValue& a, Cost b) {
    return a == DeviationValue(b);
  }

  std::string to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(*value_);
  }
  friend std::ostream& operator<<(std::ostream& os, const DeviationValue& d) {
    return os << d.to_string();
  }

 private:
  std::optional<Cost> value_;
};

// w(S): edges of S at their upper bound, every other edge at its lower bound.
// S need not be a tree.
inline ExtremeScenario worst_case_scenario(std::span<const EdgeId> edge_set,
                                           const IntervalGraph& g) {
  return ExtremeScenario::with_upper(g.edge_count(), edge_set);
}

// c_T^{w(T)} - c_{MST^{w(T)}} for a spanning tree given by its edges.
inline Cost robust_deviation_of_edges(std::span<const EdgeId> tree_edges,
                                      const IntervalGraph& g) {
  std::vector<Cost> costs(g.edge_count());
  for (EdgeId e = 0; e < costs.size(); ++e) costs[e] = g.edge(e).low;
  Cost tree_cost = 0;
  for (EdgeId e : tree_edges) {
    costs[e] = g.edge(e).high;
    tree_cost += costs[e];
  }
  const auto mst = kruskal(g, costs, {});
  if (!mst) throw InfeasibleError("no spanning tree exists");
  return tree_cost - mst->cost;
}

inline DeviationValue robust_deviation(const SpanningTree& tree,
                                       const IntervalGraph& g) {
  return DeviationValue(robust_deviation_of_edges(tree.edges(), g));
}

// Both MSTs behind the configuration lower bound, under w(S ∪ L).
struct NodeBound {
  Cost constrained_cost = 0;     // MST^{w(S∪L)}(S, R)
  MstResult unconstrained;       // MST^{w(S∪L)}, may use rejected edges
  Cost lower_bound() const { return constrained_cost - unconstrained.cost; }
};

// Returns nullopt when no tree of T(S, R) exists.
inline std::optional<NodeBound> evaluate_node(const Configuration& config,
                                              const IntervalGraph& g) {
  const auto costs = config.open_scenario().costs(g);
  auto constrained = kruskal(g, costs, config.states());
  if (!constrained) return std::nullopt;
  auto unconstrained = kruskal(g, costs, {});
  if (!unconstrained) throw InfeasibleError("no spanning tree exists");
  return NodeBound{constrained->cost, std::move(*unconstrained)};
}

// LB(<S, R>) = c_{MST^{w(S∪L)}(S,R)} - c_{MST^{w(S∪L)}}. Throws
// InfeasibleError for a configuration with no completion.
inline Cost lower_bound(const Configuration& config, const IntervalGraph& g) {
  const auto bound = evaluate_node(config, g);
  if (!bound) throw InfeasibleError("configuration has no spanning tree");
  return bound->lower_bound();
}

}  // namespace rstp

#endif  // RSTP_ROBUST_HPP_

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

#ifndef RSTP_CONFIGURATION_HPP_
#define RSTP_CONFIGURATION_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "rstp/graph.hpp"
#include "rstp/mst.hpp"

namespace rstp {

// Search node <S, R>: every edge is selected (S), rejected (R) or free (L).
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::size_t edge_count)
      : states_(edge_count, EdgeState::kFree) {}

  static Configuration from_sets(std::size_t edge_count,
                                 std::span<const EdgeId> selected,
                                 std::span<const EdgeId> rejected) {
    Configuration c(edge_count);
    for (EdgeId e : selected) c.select(e);
    for (EdgeId e : rejected) c.reject(e);
    return c;
  }

  std::size_t edge_count() const { return states_.size(); }
  EdgeState state(EdgeId e) const { return states_[e]; }
  bool is_free(EdgeId e) const { return states_[e] == EdgeState::kFree; }
  bool is_selected(EdgeId e) const {
    return states_[e] == EdgeState::kSelected;
  }
  bool is_rejected(EdgeId e) const {
    return states_[e] == EdgeState::kRejected;
  }
  std::span<const EdgeState> states() const { return states_; }

  std::size_t selected_count() const { return selected_count_; }
  std::size_t rejected_count() const { return rejected_count_; }
  std::size_t free_count() const {
    return states_.size() - selected_count_ - rejected_count_;
  }

  void select(EdgeId e) {
    if (states_.at(e) != EdgeState::kFree) {
      throw std::invalid_argument("select: edge is not free");
    }
    states_[e] = EdgeState::kSelected;
    ++selected_count_;
  }

  void reject(EdgeId e) {
    if (states_.at(e) != EdgeState::kFree) {
      throw std::invalid_argument("reject: edge is not free");
    }
    states_[e] = EdgeState::kRejected;
    ++rejected_count_;
  }

  std::vector<EdgeId> selected() const { return collect(EdgeState::kSelected); }
  std::vector<EdgeId> rejected() const { return collect(EdgeState::kRejected); }
  std::vector<EdgeId> free_edges() const { return collect(EdgeState::kFree); }

  // Union-find over the components induced by S.
  UnionFind selected_components(const IntervalGraph& g) const {
    UnionFind uf(g.vertex_count());
    for (EdgeId e = 0; e < states_.size(); ++e) {
      if (states_[e] == EdgeState::kSelected) uf.unite(g.edge(e).u, g.edge(e).v);
    }
    return uf;
  }

  // w(S ∪ L): selected and free edges at their upper bound, rejected at lower.
  ExtremeScenario open_scenario() const {
    ExtremeScenario s = ExtremeScenario::all_upper(states_.size());
    for (EdgeId e = 0; e < states_.size(); ++e) {
      if (states_[e] == EdgeState::kRejected) s.set_upper(e, false);
    }
    return s;
  }

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<EdgeId> collect(EdgeState st) const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < states_.size(); ++e) {
      if (states_[e] == st) out.push_back(e);
    }
    return out;
  }

  std::vector<EdgeState> states_;
  std::size_t selected_count_ = 0;
  std::size_t rejected_count_ = 0;
};

}  // namespace rstp

#endif  // RSTP_CONFIGURATION_HPP_

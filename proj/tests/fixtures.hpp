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

// Shared test graphs and random small-instance generators.

#ifndef RSTP_TESTS_FIXTURES_HPP_
#define RSTP_TESTS_FIXTURES_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "rstp/graph.hpp"

namespace rstp::testing {

// Triangle: e0=(0,1,[1,3]) e1=(1,2,[2,4]) e2=(0,2,[5,6]).
inline IntervalGraph g3a() {
  IntervalGraph g(3);
  g.add_edge(0, 1, 1, 3);
  g.add_edge(1, 2, 2, 4);
  g.add_edge(0, 2, 5, 6);
  return g;
}

// Triangle: e0=(0,1,[1,2]) e1=(1,2,[1,2]) e2=(0,2,[5,6]).
inline IntervalGraph g3b() {
  IntervalGraph g(3);
  g.add_edge(0, 1, 1, 2);
  g.add_edge(1, 2, 1, 2);
  g.add_edge(0, 2, 5, 6);
  return g;
}

// Path 0-1-2-3: the only spanning tree is the graph itself.
inline IntervalGraph path4() {
  IntervalGraph g(4);
  g.add_edge(0, 1, 2, 7);
  g.add_edge(1, 2, 0, 3);
  g.add_edge(2, 3, 4, 4);
  return g;
}

inline IntervalGraph single_edge() {
  IntervalGraph g(2);
  g.add_edge(0, 1, 3, 8);
  return g;
}

inline IntervalGraph complete_graph(std::size_t n, Cost low = 1, Cost high = 2) {
  IntervalGraph g(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v, low, high);
  }
  return g;
}

struct RandomGraphOptions {
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 8;
  double density = 1.0;         // probability of each vertex pair
  Cost low_max = 9;             // low uniform on {0..low_max}
  Cost high_max = 10;           // high uniform on {low+1..high_max}
  bool allow_degenerate = false;  // permit low == high
};

// Connected random graph with class-1-style integer intervals. Sparse draws
// are repeated until connected.
inline IntervalGraph random_graph(std::mt19937_64& rng,
                                  const RandomGraphOptions& o = {}) {
  std::uniform_int_distribution<std::size_t> nodes(o.min_nodes, o.max_nodes);
  std::bernoulli_distribution keep(o.density);
  const std::size_t n = nodes(rng);
  while (true) {
    IntervalGraph g(n);
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (!keep(rng)) continue;
        const Cost low = std::uniform_int_distribution<Cost>(0, o.low_max)(rng);
        const Cost high = std::uniform_int_distribution<Cost>(
            o.allow_degenerate ? low : low + 1,
            std::max(o.high_max, low + 1))(rng);
        g.add_edge(u, v, low, high);
      }
    }
    if (g.is_connected()) return g;
  }
}

// The suite used by the exactness checks: seeded, alternating complete and
// half-density graphs on 4..8 vertices.
inline std::vector<IntervalGraph> small_suite(std::size_t count,
                                              std::uint64_t seed = 20240601) {
  std::mt19937_64 rng(seed);
  std::vector<IntervalGraph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    RandomGraphOptions o;
    o.density = (i % 2 == 0) ? 1.0 : 0.5;
    out.push_back(random_graph(rng, o));
  }
  return out;
}

}  // namespace rstp::testing

#endif  // RSTP_TESTS_FIXTURES_HPP_

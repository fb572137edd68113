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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All comparisons are exact integer comparisons.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "rstp/rstp.hpp"

namespace {

using namespace rstp;
using Clock = std::chrono::steady_clock;
using Ids = std::vector<EdgeId>;

constexpr std::size_t kSuiteSize = 200;
constexpr std::size_t kConfigSamples = 1000;
constexpr std::size_t kScenarioInstances = 50;
constexpr std::size_t kLargeWeakNodes = 200;
constexpr double kLargeWeakSeconds = 5.0;
constexpr double kSmallSolveSeconds = 1.0;
constexpr double kClusteredSolveSeconds = 30.0;
constexpr std::size_t kPerfSeeds = 10;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void fail(const std::string& why) {
    if (pass) detail << "first failure: " << why << "; ";
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, Verdict& v) {
  std::string detail = v.detail.str();
  while (!detail.empty() && (detail.back() == ' ' || detail.back() == ';')) {
    detail.pop_back();
  }
  std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << id << ". " << name << " -- "
            << detail << std::endl;
  if (!v.pass) ++failures;
}

const std::vector<IntervalGraph>& suite() {
  static const auto s = testing::small_suite(kSuiteSize);
  return s;
}

const std::vector<Cost>& suite_optima() {
  static const auto optima = [] {
    std::vector<Cost> out;
    for (const auto& g : suite()) out.push_back(oracle::oracle_min_deviation(g).optimum);
    return out;
  }();
  return optima;
}

bool contains(const Ids& sorted, EdgeId e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

void oracle_exactness() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t runs = 0;
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& g = suite()[i];
    for (auto mode : {PruneMode::kRoot, PruneMode::kFull}) {
      for (auto branch : {BranchRule::kMaxWidth, BranchRule::kLowestId}) {
        SolverOptions o;
        o.mode = mode;
        o.branch = branch;
        const auto r = solve(g, o);
        ++runs;
        if (r.best_deviation != suite_optima()[i]) {
          v.fail("instance " + std::to_string(i) + " " +
                 std::string(to_string(mode)) + "/" +
                 std::string(to_string(branch)) + " got " +
                 r.best_deviation.to_string() + " want " +
                 std::to_string(suite_optima()[i]));
        }
        if (oracle::oracle_tree_deviation(r.best_tree.edges(), g) !=
            suite_optima()[i]) {
          v.fail("returned tree does not attain the optimum");
        }
      }
    }
  }
  v.detail << suite().size() << " instances x 4 option sets = " << runs
           << " solves, tolerance 0, " << seconds_since(start)
           << " s including oracle";
  report(1, "Oracle exactness", v);
}

void weak_edge_equivalence() {
  Verdict v;
  std::size_t edges = 0;
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& g = suite()[i];
    const auto weak = weak_edges(g);
    for (EdgeId e = 0; e < g.edge_count(); ++e, ++edges) {
      if (contains(weak, e) != oracle::oracle_is_weak(e, g)) {
        v.fail("instance " + std::to_string(i) + " edge " + std::to_string(e));
      }
    }
  }
  std::mt19937_64 rng(2024);
  const std::size_t n = kLargeWeakNodes;
  IntervalGraph big(n);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId w = u + 1; w < n; ++w) {
      const Cost lo = std::uniform_int_distribution<Cost>(0, 9)(rng);
      big.add_edge(u, w, lo, std::uniform_int_distribution<Cost>(lo + 1, 10)(rng));
    }
  }
  const auto start = Clock::now();
  const auto rep = detect_weak_edges(big);
  const double secs = seconds_since(start);
  if (secs >= kLargeWeakSeconds) v.fail("n=200 took " + std::to_string(secs) + " s");
  if (rep.steps > 4 * n * n) v.fail("MaxCost steps " + std::to_string(rep.steps));
  v.detail << edges << " edges checked; n=200 complete: " << secs << " s (< "
           << kLargeWeakSeconds << "), MaxCost steps " << rep.steps << " <= 4n^2 = "
           << 4 * n * n << ", cache writes " << rep.cache_writes;
  report(2, "Weak-edge equivalence", v);
}

void strong_edge_correctness() {
  Verdict v;
  std::size_t strong_total = 0;
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& g = suite()[i];
    const auto weak = weak_edges(g);
    const auto strong = strong_edges(g);
    strong_total += strong.size();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (contains(strong, e) != oracle::oracle_is_strong(e, g)) {
        v.fail("instance " + std::to_string(i) + " edge " + std::to_string(e));
      }
      if (contains(strong, e) && !contains(weak, e)) {
        v.fail("strong edge not weak, instance " + std::to_string(i));
      }
    }
  }
  v.detail << suite().size() << " instances, " << strong_total
           << " strong edges, all weak";
  report(3, "Strong-edge correctness", v);
}

// Random feasible configuration: an acyclic S and a disjoint R such that
// T(S, R) is non-empty.
std::optional<Configuration> random_configuration(const IntervalGraph& g,
                                                  std::mt19937_64& rng) {
  Configuration c(g.edge_count());
  UnionFind uf(g.vertex_count());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const double p_sel = u(rng) * 0.5;
  const double p_rej = u(rng) * 0.5;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const double x = u(rng);
    if (x < p_sel) {
      if (uf.unite(g.edge(e).u, g.edge(e).v)) c.select(e);
    } else if (x < p_sel + p_rej) {
      c.reject(e);
    }
  }
  if (!evaluate_node(c, g)) return std::nullopt;
  return c;
}

void lower_bound_validity() {
  Verdict v;
  std::mt19937_64 rng(77);
  std::size_t sampled = 0;
  std::size_t mono_checks = 0;
  while (sampled < kConfigSamples) {
    testing::RandomGraphOptions o;
    o.max_nodes = 6;
    o.density = sampled % 2 ? 0.6 : 1.0;
    const auto g = testing::random_graph(rng, o);
    for (int k = 0; k < 10 && sampled < kConfigSamples; ++k) {
      const auto c = random_configuration(g, rng);
      if (!c) continue;
      ++sampled;
      const Cost lb = lower_bound(*c, g);
      const auto best = oracle::oracle_min_deviation(
          g, oracle::kDefaultTreeBudget, c->selected(), c->rejected());
      if (best.tree_count == 0) {
        v.fail("feasible configuration with no oracle tree");
        continue;
      }
      if (lb > best.optimum) {
        v.fail("LB " + std::to_string(lb) + " > oracle " +
               std::to_string(best.optimum));
      }
      UnionFind uf = c->selected_components(g);
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (!c->is_free(e)) continue;
        Configuration rej = *c;
        rej.reject(e);
        if (evaluate_node(rej, g)) {
          ++mono_checks;
          if (lower_bound(rej, g) < lb) v.fail("LB decreased on reject");
        }
        if (!uf.connected(g.edge(e).u, g.edge(e).v)) {
          Configuration sel = *c;
          sel.select(e);
          if (evaluate_node(sel, g)) {
            ++mono_checks;
            if (lower_bound(sel, g) < lb) v.fail("LB decreased on select");
          }
        }
      }
    }
  }
  v.detail << sampled << " configurations, " << mono_checks
           << " monotonicity checks, tolerance 0";
  report(4, "Lower-bound validity and monotonicity", v);
}

void worst_case_agreement() {
  Verdict v;
  std::mt19937_64 rng(55);
  std::size_t instances = 0;
  std::size_t trees = 0;
  while (instances < kScenarioInstances) {
    testing::RandomGraphOptions o;
    o.min_nodes = 3;
    o.max_nodes = 6;
    o.density = instances % 2 ? 0.5 : 0.8;
    const auto g = testing::random_graph(rng, o);
    if (g.edge_count() > oracle::kMaxScenarioEdges) continue;
    ++instances;
    oracle::for_each_spanning_tree(g, [&](std::span<const EdgeId> t) {
      ++trees;
      const Ids edges(t.begin(), t.end());
      const auto tree =
          SpanningTree::from_edges(g, edges, worst_case_scenario(edges, g).costs(g));
      if (robust_deviation(tree, g) != oracle::oracle_deviation_by_scenarios(t, g)) {
        v.fail("instance " + std::to_string(instances));
      }
    });
  }
  v.detail << instances << " instances with m <= 12, " << trees
           << " trees, tolerance 0";
  report(5, "Worst-case scenario agreement", v);
}

void root_pruning_safety() {
  Verdict v;
  std::size_t removed = 0;
  for (std::size_t i = 0; i < suite().size(); ++i) {
    const auto& g = suite()[i];
    const auto pruned = prune_suboptimal(Configuration(g.edge_count()), g);
    removed += pruned.rejected_count();
    const auto r = oracle::oracle_min_deviation(g, oracle::kDefaultTreeBudget, {},
                                                pruned.rejected());
    if (r.optimum != suite_optima()[i]) v.fail("instance " + std::to_string(i));
  }
  v.detail << suite().size() << " instances, " << removed
           << " non-weak edges removed at the root, optimum unchanged";
  report(6, "Root-pruning safety", v);
}

void performance_envelope() {
  Verdict v;
  double worst_small = 0.0;
  for (int cls = 1; cls <= 6; ++cls) {
    for (std::uint64_t seed = 1; seed <= kPerfSeeds; ++seed) {
      const auto g = generate({cls, 10, seed});
      for (auto mode : {PruneMode::kRoot, PruneMode::kFull}) {
        SolverOptions o;
        o.mode = mode;
        const auto start = Clock::now();
        solve(g, o);
        const double secs = seconds_since(start);
        worst_small = std::max(worst_small, secs);
        if (secs >= kSmallSolveSeconds) {
          v.fail("class " + std::to_string(cls) + " seed " + std::to_string(seed) +
                 " took " + std::to_string(secs) + " s");
        }
      }
    }
  }
  v.detail << "classes 1-6 n=10 (m=45), " << kPerfSeeds
           << " seeds, both modes: max " << worst_small << " s (< "
           << kSmallSolveSeconds << "); ";
  for (int cls : {7, 8}) {
    double worst = 0.0;
    double nodes[2] = {0.0, 0.0};
    for (std::uint64_t seed = 1; seed <= kPerfSeeds; ++seed) {
      const auto g = generate({cls, 15, seed});
      int k = 0;
      for (auto mode : {PruneMode::kRoot, PruneMode::kFull}) {
        SolverOptions o;
        o.mode = mode;
        const auto start = Clock::now();
        const auto r = solve(g, o);
        const double secs = seconds_since(start);
        worst = std::max(worst, secs);
        nodes[k++] += static_cast<double>(r.stats.nodes_visited);
        if (secs >= kClusteredSolveSeconds) {
          v.fail("class " + std::to_string(cls) + " seed " + std::to_string(seed) +
                 " took " + std::to_string(secs) + " s");
        }
      }
    }
    v.detail << "class " << cls << " n=15: max " << worst << " s (< "
             << kClusteredSolveSeconds << "), mean nodes CSR "
             << nodes[0] / kPerfSeeds << " vs CSF " << nodes[1] / kPerfSeeds
             << "; ";
  }
  report(7, "Desk-scale performance envelope", v);
}

std::string strip_wall_clock(const std::string& record) {
  std::istringstream is(record);
  std::string line;
  std::string out;
  while (std::getline(is, line)) {
    if (line.rfind("wall_ms=", 0) != 0) out += line + '\n';
  }
  return out;
}

void determinism() {
  Verdict v;
  std::size_t files = 0;
  for (int cls = 1; cls <= 8; ++cls) {
    const std::size_t n = cls >= 7 ? 15 : 10;
    for (std::uint64_t seed : {1ull, 99ull, 0xDEADBEEFull}) {
      const auto a = instance_to_string(generate({cls, n, seed}));
      const auto b = instance_to_string(generate({cls, n, seed}));
      ++files;
      if (a != b) v.fail("instance bytes differ");
      const auto g = instance_from_string(a);
      for (auto mode : {PruneMode::kRoot, PruneMode::kFull}) {
        SolverOptions o;
        o.mode = mode;
        const auto r1 = make_report("x", g, o, solve(g, o), 1.0);
        const auto r2 = make_report("x", g, o, solve(g, o), 2.0);
        if (strip_wall_clock(format_report(r1)) !=
            strip_wall_clock(format_report(r2))) {
          v.fail("run reports differ");
        }
      }
    }
  }
  v.detail << files << " instance files regenerated byte-identically; reports "
           << "identical modulo wall_ms";
  report(8, "Determinism", v);
}

}  // namespace

int main() {
  oracle_exactness();
  weak_edge_equivalence();
  strong_edge_correctness();
  lower_bound_validity();
  worst_case_agreement();
  root_pruning_safety();
  performance_envelope();
  determinism();
  std::cout << (failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

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

// Run reports (flat key=value records) and the TSV benchmark table.

#ifndef RSTP_REPORT_HPP_
#define RSTP_REPORT_HPP_

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rstp/graph.hpp"
#include "rstp/instances.hpp"
#include "rstp/robust.hpp"
#include "rstp/search.hpp"

namespace rstp {

inline constexpr int kFormatVersion = 1;

struct RunReport {
  std::string instance;
  SolverOptions options;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  DeviationValue best_deviation;
  std::vector<EdgeId> best_tree;
  SearchStats stats;
  double wall_ms = 0.0;
};

// Builds the report and re-evaluates the tree's deviation from scratch.
// Throws std::logic_error when the two disagree.
inline RunReport make_report(std::string instance, const IntervalGraph& g,
                             const SolverOptions& options,
                             const SearchOutcome& outcome, double wall_ms) {
  RunReport r;
  r.instance = std::move(instance);
  r.options = options;
  r.vertex_count = g.vertex_count();
  r.edge_count = g.edge_count();
  r.best_deviation = outcome.best_deviation;
  r.best_tree.assign(outcome.best_tree.edges().begin(),
                     outcome.best_tree.edges().end());
  r.stats = outcome.stats;
  r.wall_ms = wall_ms;
  const DeviationValue check(robust_deviation_of_edges(r.best_tree, g));
  if (check != r.best_deviation) {
    throw std::logic_error("report self-check failed: tree deviation " +
                           check.to_string() + " != reported " +
                           r.best_deviation.to_string());
  }
  return r;
}

inline std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(ids[i]);
  }
  return out;
}

// One key=value pair per line, fixed key order, format=1 first and
// wall_ms last.
inline std::string format_report(const RunReport& r) {
  std::ostringstream os;
  const auto& o = r.options;
  const auto& s = r.stats;
  os << "format=" << kFormatVersion << '\n'
     << "instance=" << r.instance << '\n'
     << "nodes=" << r.vertex_count << '\n'
     << "edges=" << r.edge_count << '\n'
     << "mode=" << to_string(o.mode) << '\n'
     << "branch=" << to_string(o.branch) << '\n'
     << "branch_tree=" << to_string(o.branch_tree) << '\n'
     << "preseed_strong=" << (o.preseed_strong ? 1 : 0) << '\n'
     << "force_bridges=" << (o.force_bridges ? 1 : 0) << '\n'
     << "bound_test=" << to_string(o.bound_test) << '\n'
     << "initial=" << to_string(o.initial) << '\n'
     << "deviation=" << r.best_deviation << '\n'
     << "tree=" << join_ids(r.best_tree) << '\n'
     << "nodes_visited=" << s.nodes_visited << '\n'
     << "lb_prunes=" << s.lb_prunes << '\n'
     << "infeasible_prunes=" << s.infeasible_prunes << '\n'
     << "weak_edges_removed=" << s.weak_edges_removed << '\n'
     << "cache_writes=" << s.cache_writes << '\n'
     << "incumbent_updates=" << s.incumbent_updates << '\n'
     << "strong_edges_preseeded=" << s.strong_edges_preseeded << '\n'
     << "max_depth=" << s.max_depth << '\n'
     << "wall_ms=" << std::fixed << std::setprecision(3) << r.wall_ms << '\n';
  return os.str();
}

inline std::string summary_line(const RunReport& r) {
  std::ostringstream os;
  os << r.instance << ": deviation " << r.best_deviation << " ("
     << to_string(r.options.mode) << ", " << r.stats.nodes_visited
     << " nodes, " << std::fixed << std::setprecision(1) << r.wall_ms
     << " ms) tree {" << join_ids(r.best_tree) << "}";
  return os.str();
}

struct BenchPlan {
  std::vector<int> classes;
  std::vector<std::size_t> sizes;
  std::size_t seeds = 10;
  std::uint64_t seed_base = 1;
  std::vector<PruneMode> modes{PruneMode::kRoot, PruneMode::kFull};
  SolverOptions options;  // mode is overridden per row
};

struct BenchSummary {
  double mean = 0.0;
  double min = 0.0;
  double max = 0.0;

  static BenchSummary of(const std::vector<double>& xs) {
    BenchSummary s;
    if (xs.empty()) return s;
    s.min = *std::min_element(xs.begin(), xs.end());
    s.max = *std::max_element(xs.begin(), xs.end());
    double total = 0.0;
    for (double x : xs) total += x;
    s.mean = total / static_cast<double>(xs.size());
    return s;
  }
};

struct BenchRow {
  int class_id = 0;
  std::size_t nodes = 0;
  std::size_t edges = 0;
  PruneMode mode = PruneMode::kRoot;
  std::size_t runs = 0;
  std::size_t failed = 0;
  BenchSummary wall_ms;
  BenchSummary nodes_visited;
};

// One row per (class, size, mode), averaged over the seeds. A cell that
// cannot be generated or solved counts as failed; the run continues.
inline std::vector<BenchRow> run_bench(const BenchPlan& plan) {
  if (plan.classes.empty()) throw std::invalid_argument("bench: empty class list");
  if (plan.sizes.empty()) throw std::invalid_argument("bench: empty size list");
  if (plan.modes.empty()) throw std::invalid_argument("bench: empty mode list");
  if (plan.seeds == 0) throw std::invalid_argument("bench: need at least one seed");
  std::vector<BenchRow> rows;
  for (int class_id : plan.classes) {
    for (std::size_t size : plan.sizes) {
      std::vector<BenchRow> cell(plan.modes.size());
      std::vector<std::vector<double>> walls(plan.modes.size());
      std::vector<std::vector<double>> nodes(plan.modes.size());
      for (std::size_t k = 0; k < plan.modes.size(); ++k) {
        cell[k].class_id = class_id;
        cell[k].nodes = size;
        cell[k].mode = plan.modes[k];
      }
      for (std::size_t i = 0; i < plan.seeds; ++i) {
        IntervalGraph g;
        try {
          g = generate({class_id, size, plan.seed_base + i});
        } catch (const std::exception&) {
          for (auto& row : cell) ++row.failed;
          continue;
        }
        for (std::size_t k = 0; k < plan.modes.size(); ++k) {
          cell[k].edges = g.edge_count();
          SolverOptions options = plan.options;
          options.mode = plan.modes[k];
          try {
            const auto start = std::chrono::steady_clock::now();
            const auto outcome = solve(g, options);
            const std::chrono::duration<double, std::milli> elapsed =
                std::chrono::steady_clock::now() - start;
            make_report("", g, options, outcome, elapsed.count());
            walls[k].push_back(elapsed.count());
            nodes[k].push_back(static_cast<double>(outcome.stats.nodes_visited));
            ++cell[k].runs;
          } catch (const std::exception&) {
            ++cell[k].failed;
          }
        }
      }
      for (std::size_t k = 0; k < plan.modes.size(); ++k) {
        cell[k].wall_ms = BenchSummary::of(walls[k]);
        cell[k].nodes_visited = BenchSummary::of(nodes[k]);
        rows.push_back(cell[k]);
      }
    }
  }
  return rows;
}

inline std::string format_bench_tsv(const std::vector<BenchRow>& rows) {
  std::ostringstream os;
  os << "format\tclass\tnodes\tedges\tmode\truns\tfailed\twall_ms_mean\t"
        "wall_ms_min\twall_ms_max\tnodes_mean\tnodes_min\tnodes_max\n";
  for (const auto& r : rows) {
    os << kFormatVersion << '\t' << r.class_id << '\t' << r.nodes << '\t'
       << r.edges << '\t' << to_string(r.mode) << '\t' << r.runs << '\t'
       << r.failed;
    if (r.runs == 0) {
      os << "\t-\t-\t-\t-\t-\t-\n";
      continue;
    }
    os << std::fixed << std::setprecision(3) << '\t' << r.wall_ms.mean << '\t'
       << r.wall_ms.min << '\t' << r.wall_ms.max << std::setprecision(1)
       << '\t' << r.nodes_visited.mean << '\t' << r.nodes_visited.min << '\t'
       << r.nodes_visited.max << '\n';
  }
  return os.str();
}

}  // namespace rstp

#endif  // RSTP_REPORT_HPP_

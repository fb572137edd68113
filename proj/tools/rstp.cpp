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

// rstp: generate instances, solve them, check them by brute force, and run
// benchmark matrices.
//
// Exit status:
//   0 success
//   1 internal error (including a failed report self-check)
//   2 usage error
//   3 malformed instance file or invalid generator parameters
//   4 disconnected instance (no spanning tree)
//   5 brute-force budget refusal
//   6 I/O error

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "rstp/rstp.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kUsage = 2,
  kBadInput = 3,
  kDisconnected = 4,
  kBudget = 5,
  kIo = 6,
};

template <typename Enum>
CLI::Option* add_enum_option(CLI::App* cmd, const std::string& name, Enum& target,
                             const std::map<std::string, Enum>& choices,
                             const std::string& description) {
  std::vector<std::string> keys;
  for (const auto& [key, value] : choices) keys.push_back(key);
  return cmd
      ->add_option_function<std::string>(
          name, [&target, choices](const std::string& v) { target = choices.at(v); },
          description)
      ->transform(CLI::IsMember(keys, CLI::ignore_case));
}

void add_solver_flags(CLI::App* cmd, rstp::SolverOptions& options) {
  add_enum_option(cmd, "--branch", options.branch,
                  {{"max-width", rstp::BranchRule::kMaxWidth},
                   {"lowest-id", rstp::BranchRule::kLowestId}},
                  "Branching rule");
  add_enum_option(cmd, "--branch-tree", options.branch_tree,
                  {{"unconstrained", rstp::BranchTree::kUnconstrained},
                   {"constrained", rstp::BranchTree::kConstrained}},
                  "Tree defining preferred branching candidates");
  add_enum_option(cmd, "--bound", options.bound_test,
                  {{"strict", rstp::BoundTest::kStrict},
                   {"loose", rstp::BoundTest::kLoose}},
                  "strict: prune when LB >= incumbent; loose: only when LB > incumbent");
  add_enum_option(cmd, "--initial", options.initial,
                  {{"upper-mst", rstp::InitialIncumbent::kUpperMst},
                   {"infinite", rstp::InitialIncumbent::kInfinite}},
                  "Initial incumbent");
  cmd->add_flag("!--no-strong", options.preseed_strong,
                "Do not preselect strong edges at the root");
  cmd->add_flag("--bridges", options.force_bridges,
                "Force free bridges into the tree during infeasibility pruning");
}

const std::map<std::string, rstp::PruneMode> kModes{
    {"csr", rstp::PruneMode::kRoot}, {"csf", rstp::PruneMode::kFull}};

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::system_error(errno, std::generic_category(),
                            "cannot write " + path);
  }
  out << text;
  if (!out) {
    throw std::system_error(errno, std::generic_category(),
                            "write failed for " + path);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minmax-regret spanning trees with interval edge costs"};
  app.require_subcommand(1);

  rstp::GeneratorSpec gen_spec;
  std::string gen_output;
  auto* gen = app.add_subcommand("generate", "Write a random benchmark instance");
  gen->add_option("--class", gen_spec.class_id, "Instance class 1..8")->required();
  gen->add_option("--nodes", gen_spec.node_count, "Number of vertices")->required();
  gen->add_option("--seed", gen_spec.seed, "64-bit seed")->required();
  gen->add_option("-o,--output", gen_output, "Output path (default stdout)");

  std::string solve_path;
  std::string solve_report;
  rstp::SolverOptions solve_options;
  auto* solve = app.add_subcommand("solve", "Solve an instance exactly");
  solve->add_option("instance", solve_path, "Instance file")->required();
  add_enum_option(solve, "--mode", solve_options.mode, kModes,
                  "csr: suboptimality pruning at the root; csf: at every node");
  solve->add_option("--report", solve_report,
                    "Write the run record here (default stdout)");
  add_solver_flags(solve, solve_options);

  std::string oracle_path;
  std::uint64_t oracle_budget = rstp::oracle::kDefaultTreeBudget;
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum over all spanning trees");
  oracle->add_option("instance", oracle_path, "Instance file")->required();
  oracle->add_option("--budget", oracle_budget, "Maximum number of spanning trees");

  rstp::BenchPlan plan;
  std::vector<std::string> bench_modes{"csr", "csf"};
  std::string bench_output;
  auto* bench = app.add_subcommand("bench", "Run a class x size x mode matrix");
  bench->add_option("--classes", plan.classes, "Instance classes")
      ->required()->delimiter(',');
  bench->add_option("--sizes", plan.sizes, "Vertex counts")
      ->required()->delimiter(',');
  bench->add_option("--seeds", plan.seeds, "Instances per cell");
  bench->add_option("--seed-base", plan.seed_base, "First seed");
  bench->add_option("--modes", bench_modes, "Modes to run (csr,csf)")
      ->delimiter(',')->check(CLI::IsMember({"csr", "csf"}, CLI::ignore_case));
  bench->add_option("-o,--output", bench_output, "TSV output path (default stdout)");
  add_solver_flags(bench, plan.options);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) {
      const auto g = rstp::generate(gen_spec);
      write_text(gen_output, rstp::instance_to_string(g));
    } else if (*solve) {
      const auto g = rstp::read_instance_file(solve_path);
      const auto start = std::chrono::steady_clock::now();
      const auto outcome = rstp::solve(g, solve_options);
      const std::chrono::duration<double, std::milli> elapsed =
          std::chrono::steady_clock::now() - start;
      const auto report = rstp::make_report(solve_path, g, solve_options,
                                            outcome, elapsed.count());
      write_text(solve_report, rstp::format_report(report));
      (solve_report.empty() ? std::cerr : std::cout)
          << rstp::summary_line(report) << '\n';
    } else if (*oracle) {
      const auto g = rstp::read_instance_file(oracle_path);
      const auto result = rstp::oracle::oracle_min_deviation(g, oracle_budget);
      std::cout << "format=" << rstp::kFormatVersion << '\n'
                << "instance=" << oracle_path << '\n'
                << "optimum=" << result.optimum << '\n'
                << "optimal_trees=" << result.optimal_trees.size() << '\n'
                << "tree_count=" << result.tree_count << '\n'
                << "first_optimal_tree="
                << rstp::join_ids(result.optimal_trees.front()) << '\n';
    } else if (*bench) {
      plan.modes.clear();
      for (const auto& m : bench_modes) {
        plan.modes.push_back(m == "csf" || m == "CSF" ? rstp::PruneMode::kFull
                                                       : rstp::PruneMode::kRoot);
      }
      write_text(bench_output,
                 rstp::format_bench_tsv(rstp::run_bench(plan)));
    }
  } catch (const rstp::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const rstp::InfeasibleError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisconnected;
  } catch (const rstp::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kBudget;
  } catch (const std::system_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

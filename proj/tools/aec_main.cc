// Copyright 2026 The aecover Authors
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

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aec/commands.h"
#include "aec/error.h"

namespace {

// "a..b" or a single seed.
bool parse_seed_range(const std::string& text, std::uint64_t& first,
                      std::uint64_t& last) {
  try {
    std::size_t dots = text.find("..");
    if (dots == std::string::npos) {
      first = last = std::stoull(text);
    } else {
      first = std::stoull(text.substr(0, dots));
      last = std::stoull(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return first <= last;
}

void add_family_options(CLI::App* cmd, std::string& family,
                        aec::FamilySpec& spec, std::string& theta) {
  cmd->add_option("--family", family, "instance family")->required();
  cmd->add_option("--nodes", spec.nodes, "max number of nodes")
      ->capture_default_str();
  cmd->add_option("--terminals", spec.terminals, "max number of terminals")
      ->capture_default_str();
  cmd->add_option("--edges", spec.edges, "max number of edges")
      ->capture_default_str();
  cmd->add_option("--levels", spec.levels, "threshold pool size")
      ->capture_default_str();
  cmd->add_option("--theta", theta, "target slope (rational)")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Activation edge-cover solvers and tools"};
  app.require_subcommand(1);

  aec::SolveOptions solve;
  CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
  solve_cmd->add_option("input", solve.input, "instance file")->required();
  solve_cmd
      ->add_option("--algorithm", solve.algorithm,
                   "auto|general|locally-uniform|unit-a1|unit-a2|"
                   "unit-a2-greedy")
      ->capture_default_str();
  solve_cmd
      ->add_option("--tie-break", solve.tie_break,
                   "lowest-id|highest-id|order:<name>,...")
      ->capture_default_str();
  solve_cmd->add_flag("--exact-check", solve.exact_check,
                      "compare against the exact oracle");
  solve_cmd->add_flag("--force", solve.force_exact,
                      "run the exact check beyond its size limits");
  solve_cmd->add_flag("--timing", solve.timing, "record wall time");
  solve_cmd->add_option("--out", solve.out, "report file");

  aec::ExactOptions exact;
  CLI::App* exact_cmd = app.add_subcommand("exact", "exact optimum");
  exact_cmd->add_option("input", exact.input, "instance file")->required();
  exact_cmd->add_flag("--force", exact.force, "ignore size limits");
  exact_cmd->add_option("--out", exact.out, "report file");

  aec::GenOptions gen;
  std::string gen_family;
  std::string gen_theta = "2";
  CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance");
  add_family_options(gen_cmd, gen_family, gen.spec, gen_theta);
  gen_cmd->add_option("--seed", gen.spec.seed, "seed")->capture_default_str();
  gen_cmd->add_option("--out", gen.out, "instance file");

  aec::BenchCommandOptions bench;
  std::string bench_family;
  std::string bench_theta = "2";
  std::string seeds = "0..199";
  std::string algorithms = "general";
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "certify ratios on seeded instances");
  add_family_options(bench_cmd, bench_family, bench.bench.spec, bench_theta);
  bench_cmd->add_option("--seeds", seeds, "seed range a..b")
      ->capture_default_str();
  bench_cmd->add_option("--algorithms", algorithms, "comma-separated list")
      ->capture_default_str();
  bench_cmd->add_option("--jobs", bench.bench.jobs, "worker threads")
      ->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "report file");

  aec::BoundsOptions bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "bound tables");
  bounds_cmd->add_option("--theta", bounds.thetas, "slope values")
      ->delimiter(',');
  bounds_cmd->add_flag("--table1", bounds.table1,
                       "the standard theta grid");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*solve_cmd) return aec::cmd_solve(solve, std::cout, std::cerr);
    if (*exact_cmd) return aec::cmd_exact(exact, std::cout, std::cerr);
    if (*gen_cmd) {
      gen.spec.family = aec::parse_family(gen_family);
      gen.spec.theta = aec::Rational::parse(gen_theta);
      return aec::cmd_gen(gen, std::cout, std::cerr);
    }
    if (*bench_cmd) {
      bench.bench.spec.family = aec::parse_family(bench_family);
      bench.bench.spec.theta = aec::Rational::parse(bench_theta);
      if (!parse_seed_range(seeds, bench.bench.first_seed,
                            bench.bench.last_seed)) {
        std::cerr << "error: bad seed range '" << seeds << "'\n";
        return aec::kExitInfeasible;
      }
      std::stringstream ss(algorithms);
      std::string name;
      while (std::getline(ss, name, ',')) {
        if (!name.empty()) bench.bench.algorithms.push_back(name);
      }
      return aec::cmd_bench(bench, std::cout, std::cerr);
    }
    if (*bounds_cmd) {
      if (!bounds.table1 && bounds.thetas.empty()) {
        std::cerr << "error: give --theta or --table1\n";
        return aec::kExitInfeasible;
      }
      return aec::cmd_bounds(bounds, std::cout, std::cerr);
    }
  } catch (const aec::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return aec::kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return aec::kExitInfeasible;
  }
  return aec::kExitInternal;
}

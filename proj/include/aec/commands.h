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

// Command implementations behind the aec binary, and the benchmark harness
// that certifies empirical ratios against the claimed bounds.

#ifndef AEC_COMMANDS_H_
#define AEC_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "aec/generators.h"
#include "aec/io.h"
#include "aec/locally_uniform.h"
#include "aec/oracle.h"
#include "aec/solve_report.h"

namespace aec {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInfeasible = 2,
  kExitViolation = 3,
};

// general, locally-uniform, unit-a1, unit-a2 (exact subsolver) and
// unit-a2-greedy (harmonic greedy subsolver).
const std::vector<std::string>& algorithm_names();

// unit-a2 when every threshold is 1, locally-uniform when the instance is
// locally uniform, else general.
std::string auto_algorithm(const Instance& inst);

// `name` may be "auto". Throws Error(kParseError) for unknown names and the
// solver's own errors when it does not apply.
SolveReport run_algorithm(const std::string& name, const Instance& inst,
                          const TieBreak& tie_break = {});

// "lowest-id", "highest-id" or "order:<name>,<name>,...".
TieBreak parse_tie_break(const std::string& text, const Instance& inst);

struct SolveOptions {
  std::string input;
  std::string algorithm = "auto";
  std::string tie_break = "lowest-id";
  bool exact_check = false;
  bool force_exact = false;  // run the oracle beyond its size limits
  bool timing = false;
  std::string out;  // empty: standard output
};
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);

struct ExactOptions {
  std::string input;
  bool force = false;
  std::string out;
};
int cmd_exact(const ExactOptions& opts, std::ostream& out, std::ostream& err);

struct GenOptions {
  FamilySpec spec;
  std::string out;
};
int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err);

struct BenchOptions {
  FamilySpec spec;  // spec.seed is ignored
  std::uint64_t first_seed = 0;
  std::uint64_t last_seed = 0;  // inclusive
  std::vector<std::string> algorithms;
  ExactLimits limits;
  int jobs = 1;
};

struct BenchRun {
  std::string algorithm;
  std::optional<SolveReport> report;  // absent when not applicable
  std::string note;                   // why it was not applicable
  bool feasible = false;
};

struct BenchRecord {
  std::uint64_t seed = 0;
  std::string digest;
  std::optional<std::string> skipped;  // generation or oracle failure
  std::optional<Rational> exact_value;
  std::vector<BenchRun> runs;
};

struct BenchViolation {
  std::uint64_t seed = 0;
  std::string algorithm;
  std::string what;
};

struct BenchReport {
  BenchOptions options;
  std::vector<BenchRecord> records;  // sorted by seed
  std::vector<BenchViolation> violations;
};

BenchReport run_bench(const BenchOptions& opts);
Json bench_to_json(const BenchReport& report);

struct BenchCommandOptions {
  BenchOptions bench;
  std::string out;
};
int cmd_bench(const BenchCommandOptions& opts, std::ostream& out,
              std::ostream& err);

struct BoundsOptions {
  std::vector<double> thetas;
  bool table1 = false;
};
int cmd_bounds(const BoundsOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace aec

#endif  // AEC_COMMANDS_H_

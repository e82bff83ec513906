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

#include "aec/commands.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>

#include "aec/bounds.h"
#include "aec/error.h"
#include "aec/general_solver.h"
#include "aec/set_cover.h"
#include "aec/unit_solver.h"

namespace aec {

namespace {

bool input_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::kOracleViolation:
      return false;
    default:
      return true;
  }
}

// Runs `body`, mapping errors to exit codes.
template <typename Body>
int guarded(std::ostream& err, Body body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error(e.code()) ? kExitInfeasible : kExitInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file(path, text);
  }
}

bool not_applicable(ErrorCode code) {
  return code == ErrorCode::kNotUnitThresholds ||
         code == ErrorCode::kNotBipartite ||
         code == ErrorCode::kNonUniformFacility;
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names = {
      "general", "locally-uniform", "unit-a1", "unit-a2", "unit-a2-greedy"};
  return names;
}

std::string auto_algorithm(const Instance& inst) {
  if (inst.all_thresholds_equal(Rational(1))) return "unit-a2";
  try {
    validate_locally_uniform(inst);
    return "locally-uniform";
  } catch (const Error& e) {
    if (!not_applicable(e.code())) throw;
  }
  return "general";
}

SolveReport run_algorithm(const std::string& name, const Instance& inst,
                          const TieBreak& tie_break) {
  if (name == "auto") {
    return run_algorithm(auto_algorithm(inst), inst, tie_break);
  }
  if (name == "general") return solve_general(inst);
  if (name == "locally-uniform") {
    return solve_locally_uniform(validate_locally_uniform(inst), tie_break);
  }
  if (name == "unit-a1") return algorithm1(reduce_unit(inst));
  if (name == "unit-a2") {
    return algorithm2(reduce_unit(inst), ExactBranchAndBound());
  }
  if (name == "unit-a2-greedy") {
    SolveReport r = algorithm2(reduce_unit(inst), GreedyHarmonic());
    r.algorithm = "unit-a2-greedy";
    return r;
  }
  throw Error(ErrorCode::kParseError, "unknown algorithm '" + name + "'");
}

TieBreak parse_tie_break(const std::string& text, const Instance& inst) {
  if (text == "lowest-id") return TieBreak::lowest_id();
  if (text == "highest-id") {
    std::vector<NodeId> order(inst.num_nodes());
    for (NodeId v = 0; v < inst.num_nodes(); ++v) {
      order[v] = inst.num_nodes() - 1 - v;
    }
    return TieBreak::adversarial(std::move(order));
  }
  const std::string prefix = "order:";
  if (text.rfind(prefix, 0) == 0) {
    std::vector<NodeId> order;
    std::stringstream ss(text.substr(prefix.size()));
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!name.empty()) order.push_back(inst.id(name));
    }
    return TieBreak::adversarial(std::move(order));
  }
  throw Error(ErrorCode::kParseError, "unknown tie-break '" + text + "'");
}

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(opts.input);
    TieBreak tie_break = parse_tie_break(opts.tie_break, inst);
    auto start = std::chrono::steady_clock::now();
    SolveReport report = run_algorithm(opts.algorithm, inst, tie_break);
    std::chrono::duration<double> wall =
        std::chrono::steady_clock::now() - start;
    if (!covers(inst, report.assignment).covered) {
      throw Error(ErrorCode::kOracleViolation, "solver output is infeasible");
    }
    int code = kExitOk;
    if (opts.exact_check) {
      attach_exact(report, exact_solve(inst, {}, opts.force_exact).value);
      if (!within_claimed_bound(report)) {
        err << "violation: ratio " << format_real(*report.empirical_ratio)
            << " exceeds claimed bound " << format_real(report.claimed_bound)
            << "\n";
        code = kExitViolation;
      }
    }
    std::optional<double> seconds;
    if (opts.timing) seconds = wall.count();
    emit(opts.out, report_to_json(report, inst, seconds).dump(2) + "\n", out);
    return code;
  });
}

int cmd_exact(const ExactOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    Instance inst = load_instance(opts.input);
    ExactResult result = exact_solve(inst, {}, opts.force);
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["instance_digest"] = instance_digest(inst);
    doc["value"] = result.value.str();
    doc["optimal"] = result.optimal;
    doc["nodes_expanded"] = result.nodes_expanded;
    Json assignment = Json::object();
    for (NodeId v = 0; v < inst.num_nodes(); ++v) {
      if (!result.assignment[v].is_zero()) {
        assignment[inst.name(v)] = result.assignment[v].str();
      }
    }
    doc["assignment"] = std::move(assignment);
    emit(opts.out, doc.dump(2) + "\n", out);
    return kExitOk;
  });
}

int cmd_gen(const GenOptions& opts, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    GeneratedInstance g = generate(opts.spec);
    emit(opts.out, format_instance(g.instance), out);
    return kExitOk;
  });
}

namespace {

BenchRecord bench_one(const BenchOptions& opts, std::uint64_t seed) {
  BenchRecord rec;
  rec.seed = seed;
  FamilySpec spec = opts.spec;
  spec.seed = seed;
  GeneratedInstance g;
  try {
    g = generate(spec);
  } catch (const Error& e) {
    rec.skipped = std::string("generation: ") + e.what();
    return rec;
  }
  const Instance& inst = g.instance;
  rec.digest = instance_digest(inst);
  try {
    ExactResult exact = exact_solve(inst, opts.limits);
    if (!exact.optimal) {
      rec.skipped = "oracle: time budget exceeded";
      return rec;
    }
    rec.exact_value = exact.value;
  } catch (const Error& e) {
    rec.skipped = std::string("oracle: ") + e.what();
    return rec;
  }
  TieBreak tie_break = g.adversarial_order.empty()
                           ? TieBreak::lowest_id()
                           : TieBreak::adversarial(g.adversarial_order);
  for (const std::string& name : opts.algorithms) {
    BenchRun run;
    run.algorithm = name;
    try {
      SolveReport report = run_algorithm(name, inst, tie_break);
      run.feasible = covers(inst, report.assignment).covered;
      attach_exact(report, *rec.exact_value);
      run.report = std::move(report);
    } catch (const Error& e) {
      if (!not_applicable(e.code())) throw;
      run.note = e.what();
    }
    rec.runs.push_back(std::move(run));
  }
  return rec;
}

}  // namespace

BenchReport run_bench(const BenchOptions& opts) {
  if (opts.last_seed < opts.first_seed) {
    throw Error(ErrorCode::kDomainError, "empty seed range");
  }
  for (const std::string& name : opts.algorithms) {
    if (std::find(algorithm_names().begin(), algorithm_names().end(), name) ==
        algorithm_names().end()) {
      throw Error(ErrorCode::kParseError, "unknown algorithm '" + name + "'");
    }
  }
  BenchReport report;
  report.options = opts;
  const std::uint64_t count = opts.last_seed - opts.first_seed + 1;
  report.records.resize(count);
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::uint64_t i = next++; i < count; i = next++) {
      try {
        report.records[i] = bench_one(opts, opts.first_seed + i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const BenchRecord& rec : report.records) {
    for (const BenchRun& run : rec.runs) {
      if (!run.report) continue;
      if (!run.feasible) {
        report.violations.push_back({rec.seed, run.algorithm, "infeasible"});
      }
      if (!within_claimed_bound(*run.report)) {
        report.violations.push_back(
            {rec.seed, run.algorithm,
             "ratio " + format_real(*run.report->empirical_ratio) +
                 " exceeds " + run.report->bound_name + " = " +
                 format_real(run.report->claimed_bound)});
      }
    }
  }
  return report;
}

Json bench_to_json(const BenchReport& report) {
  const BenchOptions& o = report.options;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  Json spec;
  spec["family"] = family_name(o.spec.family);
  spec["nodes"] = o.spec.nodes;
  spec["terminals"] = o.spec.terminals;
  spec["edges"] = o.spec.edges;
  spec["levels"] = o.spec.levels;
  spec["theta"] = o.spec.theta.str();
  doc["family_spec"] = std::move(spec);
  doc["seeds"] = {{"first", o.first_seed}, {"last", o.last_seed}};
  doc["algorithms"] = o.algorithms;

  struct Stats {
    int runs = 0;
    double max_ratio = 0;
    double sum_ratio = 0;
  };
  std::map<std::string, Stats> stats;
  for (const std::string& a : o.algorithms) stats[a];
  int skipped = 0;
  Json instances = Json::array();
  for (const BenchRecord& rec : report.records) {
    Json entry;
    entry["seed"] = rec.seed;
    if (!rec.digest.empty()) entry["instance_digest"] = rec.digest;
    if (rec.skipped) {
      ++skipped;
      entry["skipped"] = *rec.skipped;
      instances.push_back(std::move(entry));
      continue;
    }
    entry["exact_value"] = rec.exact_value->str();
    Json runs = Json::array();
    for (const BenchRun& run : rec.runs) {
      Json r;
      r["algorithm"] = run.algorithm;
      if (!run.report) {
        r["not_applicable"] = run.note;
      } else {
        const SolveReport& s = *run.report;
        r["value"] = s.value.str();
        r["feasible"] = run.feasible;
        r["theta"] = s.theta.str();
        r["delta"] = s.delta;
        r["claimed_bound"] = format_real(s.claimed_bound);
        r["bound_name"] = s.bound_name;
        r["empirical_ratio"] = format_real(*s.empirical_ratio);
        Stats& st = stats[run.algorithm];
        ++st.runs;
        st.max_ratio = std::max(st.max_ratio, *s.empirical_ratio);
        st.sum_ratio += *s.empirical_ratio;
      }
      runs.push_back(std::move(r));
    }
    entry["runs"] = std::move(runs);
    instances.push_back(std::move(entry));
  }
  Json summary = Json::object();
  for (const std::string& a : o.algorithms) {
    const Stats& st = stats[a];
    Json s;
    s["runs"] = st.runs;
    if (st.runs > 0) {
      s["max_ratio"] = format_real(st.max_ratio);
      s["mean_ratio"] = format_real(st.sum_ratio / st.runs);
    }
    summary[a] = std::move(s);
  }
  doc["summary"] = std::move(summary);
  doc["skipped"] = skipped;
  Json violations = Json::array();
  for (const BenchViolation& v : report.violations) {
    violations.push_back(
        {{"seed", v.seed}, {"algorithm", v.algorithm}, {"what", v.what}});
  }
  doc["violations"] = std::move(violations);
  doc["instances"] = std::move(instances);
  return doc;
}

int cmd_bench(const BenchCommandOptions& opts, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    BenchReport report = run_bench(opts.bench);
    emit(opts.out, bench_to_json(report).dump(2) + "\n", out);
    for (const BenchViolation& v : report.violations) {
      err << "violation: seed " << v.seed << " " << v.algorithm << ": "
          << v.what << "\n";
    }
    return report.violations.empty() ? kExitOk : kExitViolation;
  });
}

int cmd_bounds(const BoundsOptions& opts, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    BoundTable table;
    if (opts.table1) {
      table = table1();
    } else {
      if (opts.thetas.empty()) {
        throw Error(ErrorCode::kDomainError, "no theta given");
      }
      for (double theta : opts.thetas) table.rows.push_back(bound_row(theta));
    }
    print_bound_table(out, table);
    return kExitOk;
  });
}

}  // namespace aec

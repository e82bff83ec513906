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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <sstream>

#include "aec/commands.h"
#include "aec/error.h"
#include "aec/generators.h"
#include "aec/io.h"

namespace aec {
namespace {

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("aec_cli_" + name))
      .string();
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  write_file(path, text);
  return path;
}

const char* kSingleEdge = R"({"nodes": ["u", "v"], "terminals": ["u"],
  "edges": [{"u": "u", "v": "v", "tu": "2", "tv": "3"}]})";

TEST_CASE("solve writes a report") {
  const std::string in = write_temp("edge.json", kSingleEdge);
  SolveOptions opts;
  opts.input = in;
  opts.algorithm = "general";
  opts.exact_check = true;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(opts, out, err) == kExitOk);
  Json doc = Json::parse(out.str());
  CHECK(doc["schema_version"] == kSchemaVersion);
  CHECK(doc["algorithm"] == "general");
  CHECK(doc["value"] == "5");
  CHECK(doc["exact_value"] == "5");
  CHECK(doc["empirical_ratio"] == "1.0000");
  CHECK_FALSE(doc.contains("wall_seconds"));
  CHECK(doc["instance_digest"] == instance_digest(parse_instance(kSingleEdge)));

  opts.timing = true;
  opts.out = temp_path("edge_report.json");
  std::ostringstream out2;
  REQUIRE(cmd_solve(opts, out2, err) == kExitOk);
  CHECK(out2.str().empty());
  CHECK(Json::parse(read_file(opts.out)).contains("wall_seconds"));
  std::remove(opts.out.c_str());
  std::remove(in.c_str());
}

TEST_CASE("reports are reproducible") {
  FamilySpec spec;
  spec.family = Family::kGeneralRandom;
  spec.seed = 7;
  const std::string in =
      write_temp("gen7.json", format_instance(generate(spec).instance));
  SolveOptions opts;
  opts.input = in;
  std::ostringstream a, b, err;
  REQUIRE(cmd_solve(opts, a, err) == kExitOk);
  REQUIRE(cmd_solve(opts, b, err) == kExitOk);
  CHECK(a.str() == b.str());
  std::remove(in.c_str());
}

TEST_CASE("auto dispatch") {
  // Two adjacent terminals: neither unit nor bipartite.
  Instance general = parse_instance(R"({"nodes": ["a", "b"],
    "terminals": ["a", "b"],
    "edges": [{"u": "a", "v": "b", "tu": "2", "tv": "1"}]})");
  CHECK(auto_algorithm(general) == "general");
  CHECK(run_algorithm("auto", general).value == Rational(3));

  CHECK(auto_algorithm(tight73().instance) == "unit-a2");
  CHECK(run_algorithm("auto", tight73().instance).value == Rational(60));

  Instance lu = random_uniform(6, 4, 3);
  CHECK(auto_algorithm(lu) == "locally-uniform");
  CHECK(auto_algorithm(parse_instance(kSingleEdge)) == "locally-uniform");
}

TEST_CASE("tie-break on the tight example") {
  const Instance inst = tight73().instance;
  const std::string in = write_temp("tight.json", format_instance(inst));
  SolveOptions opts;
  opts.input = in;
  opts.algorithm = "locally-uniform";
  opts.tie_break = "highest-id";
  opts.exact_check = true;
  opts.force_exact = true;
  std::ostringstream out, err;
  REQUIRE(cmd_solve(opts, out, err) == kExitOk);
  Json doc = Json::parse(out.str());
  CHECK(doc["value"] == "73");
  CHECK(doc["exact_value"] == "60");
  CHECK(doc["empirical_ratio"] == "1.2167");

  std::string order = "order:";
  for (NodeId b : tight73().adversarial_order) {
    if (order.size() > 6) order += ",";
    order += inst.name(b);
  }
  CHECK(run_algorithm("locally-uniform", inst, parse_tie_break(order, inst))
            .value == Rational(73));
  CHECK(run_algorithm("locally-uniform", inst,
                      parse_tie_break("lowest-id", inst))
            .value == Rational(60));
  CHECK_THROWS_AS(parse_tie_break("sideways", inst), Error);
  CHECK_THROWS_AS(parse_tie_break("order:nobody", inst), Error);
  std::remove(in.c_str());
}

TEST_CASE("exit codes") {
  std::ostringstream out, err;
  SolveOptions missing;
  missing.input = temp_path("does_not_exist.json");
  CHECK(cmd_solve(missing, out, err) == kExitInfeasible);

  const std::string bad = write_temp("bad.json", "{\"nodes\": [");
  SolveOptions parse;
  parse.input = bad;
  CHECK(cmd_solve(parse, out, err) == kExitInfeasible);

  const std::string isolated = write_temp(
      "isolated.json",
      R"({"nodes": ["u", "v", "w"], "terminals": ["u", "w"],
          "edges": [{"u": "u", "v": "v", "tu": "1", "tv": "1"}]})");
  SolveOptions infeasible;
  infeasible.input = isolated;
  CHECK(cmd_solve(infeasible, out, err) == kExitInfeasible);
  ExactOptions ex;
  ex.input = isolated;
  CHECK(cmd_exact(ex, out, err) == kExitInfeasible);

  const std::string edge = write_temp("edge2.json", kSingleEdge);
  SolveOptions wrong;
  wrong.input = edge;
  wrong.algorithm = "unit-a1";
  CHECK(cmd_solve(wrong, out, err) == kExitInfeasible);
  wrong.algorithm = "no-such-algorithm";
  CHECK(cmd_solve(wrong, out, err) == kExitInfeasible);
  CHECK_FALSE(err.str().empty());

  for (const std::string& p : {bad, isolated, edge}) std::remove(p.c_str());
}

TEST_CASE("exact command") {
  const std::string in =
      write_temp("tight_exact.json", format_instance(tight73().instance));
  ExactOptions opts;
  opts.input = in;
  std::ostringstream out, err;
  CHECK(cmd_exact(opts, out, err) == kExitInfeasible);
  opts.force = true;
  std::ostringstream forced;
  REQUIRE(cmd_exact(opts, forced, err) == kExitOk);
  Json doc = Json::parse(forced.str());
  CHECK(doc["value"] == "60");
  CHECK(doc["optimal"] == true);
  std::remove(in.c_str());
}

TEST_CASE("gen command is deterministic") {
  GenOptions opts;
  opts.spec.family = Family::kThetaSetCover;
  opts.spec.seed = 11;
  opts.spec.theta = Rational(5);
  std::ostringstream a, b, err;
  REQUIRE(cmd_gen(opts, a, err) == kExitOk);
  REQUIRE(cmd_gen(opts, b, err) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK(format_instance(parse_instance(a.str())) == a.str());
}

TEST_CASE("bench is reproducible across job counts") {
  BenchCommandOptions opts;
  opts.bench.spec.family = Family::kUniformRandom;
  opts.bench.first_seed = 0;
  opts.bench.last_seed = 29;
  opts.bench.algorithms = {"general", "locally-uniform", "unit-a1"};
  opts.bench.jobs = 1;
  std::ostringstream one, err;
  REQUIRE(cmd_bench(opts, one, err) == kExitOk);
  opts.bench.jobs = 4;
  std::ostringstream four;
  REQUIRE(cmd_bench(opts, four, err) == kExitOk);
  CHECK(one.str() == four.str());

  BenchReport report = run_bench(opts.bench);
  CHECK(report.records.size() == 30);
  CHECK(report.violations.empty());
  for (const BenchRecord& rec : report.records) {
    REQUIRE(rec.runs.size() == 3);
    CHECK(rec.runs[0].report.has_value());
    // Uniform instances have non-unit thresholds in general.
    if (!rec.runs[2].report) CHECK_FALSE(rec.runs[2].note.empty());
  }
}

TEST_CASE("bounds command") {
  BoundsOptions opts;
  opts.table1 = true;
  std::ostringstream out, err;
  REQUIRE(cmd_bounds(opts, out, err) == kExitOk);
  const std::string text = out.str();
  CHECK(text.find("1.4631") != std::string::npos);
  CHECK(text.find("1.3667") != std::string::npos);

  BoundsOptions one;
  one.thetas = {2.0};
  std::ostringstream single;
  REQUIRE(cmd_bounds(one, single, err) == kExitOk);
  CHECK(single.str().find("1.4631") != std::string::npos);
}

}  // namespace
}  // namespace aec

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

#include <algorithm>
#include <map>

#include "aec/bounds.h"
#include "aec/error.h"
#include "aec/generators.h"
#include "aec/locally_uniform.h"
#include "aec/oracle.h"

namespace aec {
namespace {

Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

ErrorCode code_of(const Instance& inst) {
  try {
    validate_locally_uniform(inst);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidInstance;  // no error
}

TEST_CASE("one facility serving k clients") {
  for (int k = 1; k <= 6; ++k) {
    std::vector<std::optional<Rational>> row = {R(1)};
    std::vector<std::vector<std::optional<Rational>>> d(k, row);
    Instance inst = from_facility_location({R(1)}, d);
    SolveReport r = solve_locally_uniform(validate_locally_uniform(inst));
    CHECK(r.value == R(1 + k));
    CHECK(r.value == exact_solve(inst).value);
  }
}

TEST_CASE("validation") {
  // Facility location with uniform service per facility.
  Instance fl = from_facility_location(
      {R(3), R(1)}, {{R(2), R(5)}, {R(2), std::nullopt}, {std::nullopt, R(5)}});
  UniformBipartiteInstance ubi = validate_locally_uniform(fl);
  CHECK(ubi.clients.size() == 3);
  CHECK(ubi.facilities.size() == 2);
  CHECK(ubi.theta.value() == R(3, 2));
  CHECK(ubi.delta == 2);

  Instance mixed = from_facility_location({R(3)}, {{R(2)}, {R(4)}});
  CHECK(code_of(mixed) == ErrorCode::kNonUniformFacility);

  Instance rr = Instance::from_names({"a", "b"}, {"a", "b"},
                                     {{"a", "b", R(1), R(1)}});
  CHECK(code_of(rr) == ErrorCode::kNotBipartite);
  Instance ff = Instance::from_names(
      {"a", "f", "g"}, {"a"}, {{"a", "f", R(1), R(1)}, {"f", "g", R(1), R(1)}});
  CHECK(code_of(ff) == ErrorCode::kNotBipartite);
}

TEST_CASE("epsilon-threshold set cover is locally uniform with slope 1/eps") {
  const Rational eps(1, 4);
  Instance inst = from_theta_setcover(3, {{0, 1}, {1, 2}},
                                      {R(1), R(1)}, R(1) / eps);
  UniformBipartiteInstance ubi = validate_locally_uniform(inst);
  for (NodeId f : ubi.facilities) CHECK(ubi.service[f] == eps);
  CHECK(ubi.theta.value() == R(4));
  CHECK(derive_costs(inst).theta.value() == R(4));
}

TEST_CASE("facility-location instances respect their slope target") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Instance inst = random_facility_location(5, 4, R(3), seed);
    Slope th = derive_costs(inst).theta;
    REQUIRE_FALSE(th.is_infinite());
    CHECK(th.value() <= R(3));
  }
}

TEST_CASE("tight example") {
  TightExample t = tight73();
  UniformBipartiteInstance ubi = validate_locally_uniform(t.instance);
  LocallyUniformRun bad =
      run_locally_uniform(ubi, TieBreak::adversarial(t.adversarial_order));
  CHECK(bad.report.value == R(73));
  CHECK(bad.picks.size() == 25);
  SolveReport good = solve_locally_uniform(ubi);
  CHECK(good.value == R(60));
  CHECK(exact_solve(t.instance, {}, true).value == R(60));
}

TEST_CASE("unit weights reproduce the classical set-cover greedy") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const int n = rng.between(2, 8);
    const int m = rng.between(2, 6);
    std::vector<std::vector<int>> sets(m);
    for (int s = 0; s < m; ++s) {
      for (int e = 0; e < n; ++e) {
        if (rng.chance(40)) sets[s].push_back(e);
      }
    }
    for (int e = 0; e < n; ++e) sets[rng.below(m)].push_back(e);
    for (auto& s : sets) {
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    Instance inst = from_theta_setcover(n, sets, std::vector<Rational>(m, R(1)),
                                        R(1));
    LocallyUniformRun run =
        run_locally_uniform(validate_locally_uniform(inst));
    // Classical greedy: most uncovered elements, lowest index on ties.
    std::vector<bool> covered(n);
    std::vector<NodeId> expected;
    while (std::find(covered.begin(), covered.end(), false) != covered.end()) {
      int best = -1, best_gain = 0;
      for (int s = 0; s < m; ++s) {
        int gain = 0;
        for (int e : sets[s]) gain += !covered[e];
        if (gain > best_gain) {
          best = s;
          best_gain = gain;
        }
      }
      for (int e : sets[best]) covered[e] = true;
      expected.push_back(n + best);
    }
    CAPTURE(seed);
    CHECK(run.picks == expected);
  }
}

TEST_CASE("per-star accounting against an optimal decomposition") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = random_uniform(6, 4, seed);
    UniformBipartiteInstance ubi = validate_locally_uniform(inst);
    LocallyUniformRun run = run_locally_uniform(ubi);
    // Step at which each client got covered.
    std::map<NodeId, int> when;
    for (int step = 0; step < static_cast<int>(run.picks.size()); ++step) {
      for (NodeId u : ubi.neighbors[run.picks[step]]) {
        when.try_emplace(u, step);
      }
    }
    ExactResult opt = exact_solve(inst);
    for (const Star& star : exact_star_decomposition(inst, opt)) {
      NodeId f = star.root;
      std::vector<NodeId> clients = star.leaves;
      if (inst.is_terminal(f)) {
        // A single-edge star rooted at its client.
        REQUIRE(clients.size() == 1);
        std::swap(f, clients[0]);
      }
      std::sort(clients.begin(), clients.end(),
                [&](NodeId a, NodeId b) { return when[a] < when[b]; });
      const int k = static_cast<int>(clients.size());
      Rational total;
      for (int pos = 0; pos < k; ++pos) {
        const int from_last = k - pos;
        CAPTURE(seed);
        CHECK(run.price[clients[pos]] <=
              ubi.weight[f] / R(from_last) + ubi.service[f]);
        total += run.price[clients[pos]];
      }
      Rational hk;
      for (int i = 1; i <= k; ++i) hk += R(1, i);
      CHECK(total <= ubi.weight[f] * hk + R(k) * ubi.service[f]);
    }
  }
}

TEST_CASE("seeded ratios stay within the truncated bound") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Instance inst = random_uniform(6, 4, seed);
    SolveReport r = solve_locally_uniform(validate_locally_uniform(inst));
    attach_exact(r, exact_solve(inst).value);
    CAPTURE(seed);
    CHECK(covers(inst, r.assignment).covered);
    CHECK(within_claimed_bound(r));
  }
}

}  // namespace
}  // namespace aec

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

#include "aec/locally_uniform.h"

#include <algorithm>
#include <optional>
#include <set>

#include "aec/bounds.h"
#include "aec/error.h"

namespace aec {

UniformBipartiteInstance validate_locally_uniform(const Instance& inst) {
  UniformBipartiteInstance ubi;
  const int n = inst.num_nodes();
  ubi.num_nodes = n;
  ubi.weight.assign(n, Rational(0));
  ubi.service.assign(n, Rational(0));
  ubi.neighbors.assign(n, {});
  for (const Edge& e : inst.edges()) {
    if (inst.is_terminal(e.u) == inst.is_terminal(e.v)) {
      throw Error(ErrorCode::kNotBipartite,
                  "edge '" + inst.name(e.u) + "'-'" + inst.name(e.v) +
                      "' does not join a client to a facility");
    }
  }
  bool infinite = false;
  Rational theta(0);
  for (NodeId v = 0; v < n; ++v) {
    if (inst.is_terminal(v)) {
      ubi.clients.push_back(v);
      continue;
    }
    const auto incident = inst.incident(v);
    if (incident.empty()) continue;
    const Rational w = inst.threshold_at(incident.front(), v);
    const Rational t = inst.threshold_at(
        incident.front(), inst.other_end(incident.front(), v));
    std::set<NodeId> seen;
    for (const EdgeId e : incident) {
      const NodeId u = inst.other_end(e, v);
      if (inst.threshold_at(e, v) != w || inst.threshold_at(e, u) != t ||
          !seen.insert(u).second) {
        throw Error(ErrorCode::kNonUniformFacility,
                    "facility '" + inst.name(v) + "'");
      }
    }
    ubi.facilities.push_back(v);
    ubi.weight[v] = w;
    ubi.service[v] = t;
    ubi.neighbors[v].assign(seen.begin(), seen.end());
    for (const NodeId u : seen) ubi.neighbors[u].push_back(v);
    ubi.delta = std::max(ubi.delta, static_cast<int>(seen.size()));
    if (t.is_zero()) {
      if (!w.is_zero()) infinite = true;
    } else {
      theta = max(theta, w / t);
    }
  }
  for (auto& list : ubi.neighbors) std::sort(list.begin(), list.end());
  ubi.theta = infinite ? Slope::infinite() : Slope(theta);
  return ubi;
}

LocallyUniformRun run_locally_uniform(const UniformBipartiteInstance& ubi,
                                      const TieBreak& tie_break) {
  const int n = ubi.num_nodes;
  for (const NodeId u : ubi.clients) {
    if (ubi.neighbors[u].empty()) {
      throw Error(ErrorCode::kInfeasible, "client without a facility");
    }
  }
  // Rank of each facility for tie-breaking.
  std::vector<int> rank(n, 0);
  {
    std::vector<NodeId> order;
    std::vector<bool> listed(n, false);
    if (tie_break.kind == TieBreak::Kind::kAdversarialOrder) {
      for (const NodeId v : tie_break.priority) {
        if (v >= 0 && v < n && !listed[v]) {
          listed[v] = true;
          order.push_back(v);
        }
      }
    }
    for (const NodeId v : ubi.facilities) {
      if (!listed[v]) order.push_back(v);
    }
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
      rank[order[i]] = i;
    }
  }

  LocallyUniformRun run;
  run.price.assign(n, Rational(0));
  Assignment a(n);
  std::vector<bool> covered(n, false);
  std::vector<int> uncovered_count(n, 0);
  for (const NodeId v : ubi.facilities) {
    uncovered_count[v] = static_cast<int>(ubi.neighbors[v].size());
  }
  std::size_t remaining = ubi.clients.size();
  while (remaining > 0) {
    std::optional<NodeId> best;
    Rational best_avg;
    for (const NodeId v : ubi.facilities) {
      const int k = uncovered_count[v];
      if (k == 0) continue;
      const Rational avg = ubi.weight[v] / Rational(k) + ubi.service[v];
      if (!best || avg < best_avg ||
          (avg == best_avg && rank[v] < rank[*best])) {
        best = v;
        best_avg = avg;
      }
    }
    // Every client has a facility, so some facility still has k > 0.
    const NodeId v = *best;
    run.picks.push_back(v);
    a[v] = ubi.weight[v];
    for (const NodeId u : ubi.neighbors[v]) {
      if (covered[u]) continue;
      covered[u] = true;
      --remaining;
      a[u] = ubi.service[v];
      run.price[u] = best_avg;
      for (const NodeId f : ubi.neighbors[u]) --uncovered_count[f];
    }
  }

  run.report.algorithm = "locally-uniform";
  run.report.assignment = std::move(a);
  run.report.value = run.report.assignment.total();
  run.report.theta = ubi.theta;
  run.report.delta = ubi.delta;
  const ClaimedBound bound = locally_uniform_bound(ubi.theta, ubi.delta);
  run.report.claimed_bound = bound.value;
  run.report.bound_name = bound.name;
  return run;
}

SolveReport solve_locally_uniform(const UniformBipartiteInstance& ubi,
                                  const TieBreak& tie_break) {
  return run_locally_uniform(ubi, tie_break).report;
}

}  // namespace aec

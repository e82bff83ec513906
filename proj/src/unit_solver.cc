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

#include "aec/unit_solver.h"

#include <algorithm>
#include <optional>

#include "aec/bounds.h"
#include "aec/error.h"

namespace aec {
namespace {

SolveReport make_report(const UnitResidual& res, const char* algorithm,
                        const std::vector<int>& chosen) {
  SolveReport report;
  report.algorithm = algorithm;
  report.assignment = res.assignment(chosen);
  report.value = report.assignment.total();
  report.theta = Slope(Rational(1));
  report.delta = res.system.max_set_size();
  return report;
}

}  // namespace

Assignment UnitResidual::assignment(const std::vector<int>& chosen_sets) const {
  Assignment a(num_nodes);
  for (const NodeId u : terminals) a[u] = Rational(1);
  for (const int s : chosen_sets) a[set_nodes[s]] = Rational(1);
  return a;
}

UnitResidual reduce_unit(const Instance& inst) {
  if (!inst.all_thresholds_equal(Rational(1))) {
    throw Error(ErrorCode::kNotUnitThresholds, "some threshold differs from 1");
  }
  UnitResidual res;
  res.num_nodes = inst.num_nodes();
  res.terminals = inst.terminals();
  res.base_value = static_cast<int>(res.terminals.size());

  std::vector<bool> precovered(inst.num_nodes(), false);
  for (const Edge& e : inst.edges()) {
    if (inst.is_terminal(e.u) && inst.is_terminal(e.v)) {
      precovered[e.u] = precovered[e.v] = true;
    }
  }
  std::vector<int> element_of(inst.num_nodes(), -1);
  for (const NodeId u : res.terminals) {
    if (precovered[u]) {
      res.precovered.push_back(u);
      continue;
    }
    element_of[u] = static_cast<int>(res.element_nodes.size());
    res.element_nodes.push_back(u);
  }
  res.system.num_elements = static_cast<int>(res.element_nodes.size());
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    if (inst.is_terminal(v)) continue;
    std::vector<int> set;
    for (const EdgeId e : inst.incident(v)) {
      const int element = element_of[inst.other_end(e, v)];
      if (element >= 0) set.push_back(element);
    }
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) continue;
    res.set_nodes.push_back(v);
    res.system.sets.push_back(std::move(set));
  }
  std::vector<bool> reachable(res.system.num_elements, false);
  for (const auto& set : res.system.sets) {
    for (const int e : set) reachable[e] = true;
  }
  for (int e = 0; e < res.system.num_elements; ++e) {
    if (!reachable[e]) {
      throw Error(ErrorCode::kInfeasible,
                  "terminal '" + inst.name(res.element_nodes[e]) +
                      "' cannot be covered");
    }
  }
  return res;
}

SolveReport algorithm1(const UnitResidual& res) {
  const SetSystem& system = res.system;
  std::vector<bool> alive(system.num_elements, true);
  std::vector<int> chosen;
  while (true) {
    int best = -1;
    int best_size = 2;
    for (int s = 0; s < static_cast<int>(system.sets.size()); ++s) {
      int size = 0;
      for (const int e : system.sets[s]) size += alive[e] ? 1 : 0;
      if (size > best_size) {
        best = s;
        best_size = size;
      }
    }
    if (best < 0) break;
    chosen.push_back(best);
    for (const int e : system.sets[best]) alive[e] = false;
  }
  const SetSystem rest = system.restrict_to(alive, nullptr);
  const SetCoverSolution tail = exact_2setcover(rest);
  chosen.insert(chosen.end(), tail.chosen.begin(), tail.chosen.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());

  SolveReport report = make_report(res, "unit-a1", chosen);
  report.claimed_bound = kAlgorithm1Ratio.to_double();
  report.bound_name = "1+67/360";
  return report;
}

std::vector<int> extract_stars(const SetSystem& system, int k,
                               std::vector<bool>& alive,
                               std::vector<bool>& removed) {
  std::vector<int> roots;
  for (int s = 0; s < static_cast<int>(system.sets.size()); ++s) {
    if (removed[s]) continue;
    int live = 0;
    for (const int e : system.sets[s]) live += alive[e] ? 1 : 0;
    if (live != k + 1) continue;
    removed[s] = true;
    roots.push_back(s);
    for (const int e : system.sets[s]) alive[e] = false;
  }
  return roots;
}

SolveReport algorithm2(const UnitResidual& res,
                       const KSetCoverSolver& subsolver) {
  const SetSystem& system = res.system;
  const int num_sets = static_cast<int>(system.sets.size());
  std::vector<bool> alive(system.num_elements, true);
  std::vector<bool> removed(num_sets, false);
  std::vector<int> roots;

  std::optional<std::vector<int>> best;
  UnitAudit audit;
  bool certified = true;
  for (int k = system.max_set_size(); k >= 0; --k) {
    for (const int s : extract_stars(system, k, alive, removed)) {
      roots.push_back(s);
    }
    if (k > 6) continue;

    std::vector<int> cover;
    if (k > 0) {
      std::vector<int> element_map;
      SetSystem rest = system.restrict_to(alive, &element_map);
      // Removed roots have no live element left; drop the emptied sets.
      SetSystem compact;
      compact.num_elements = rest.num_elements;
      std::vector<int> set_map;
      for (int s = 0; s < num_sets; ++s) {
        if (rest.sets[s].empty()) continue;
        set_map.push_back(s);
        compact.sets.push_back(rest.sets[s]);
      }
      const SetCoverSolution sub = subsolver.solve(compact, k);
      for (const int s : sub.chosen) cover.push_back(set_map[s]);
      const auto ratio = subsolver.ratio(k);
      if (!ratio || alpha_table().alpha[k] < *ratio) certified = false;
    }
    std::vector<int> candidate = roots;
    candidate.insert(candidate.end(), cover.begin(), cover.end());
    if (!best || candidate.size() < best->size()) {
      audit.winning_k = k;
      audit.star_roots = static_cast<int>(roots.size());
      audit.subsolver_sets = static_cast<int>(cover.size());
      best = std::move(candidate);
    }
  }
  std::sort(best->begin(), best->end());

  SolveReport report = make_report(res, "unit-a2", *best);
  report.unit_audit = audit;
  if (certified) {
    report.claimed_bound = kUnitRatio.to_double();
    report.bound_name = "1555/1347";
  } else {
    // The k = 0 candidate is the plain star greedy.
    report.claimed_bound = kLocallyUniformUnitRatio.to_double();
    report.bound_name = "73/60";
  }
  return report;
}

}  // namespace aec

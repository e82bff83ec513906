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

#include "aec/general_solver.h"

#include <algorithm>
#include <utility>

#include "aec/bounds.h"
#include "aec/error.h"

namespace aec {
namespace {

// a/b < c/d for positive b, d.
bool less_ratio(const Rational& a, const Rational& b, const Rational& c,
                const Rational& d) {
  return a * d < c * b;
}

bool counts(const DerivedCosts& costs, const std::vector<bool>& covered,
            NodeId u) {
  return !covered[u] && costs.c[u] > 0;
}

}  // namespace

Rational CandidateStar::payment() const {
  Rational sum = root_increment;
  for (const StarLeaf& leaf : leaves) sum += leaf.increment;
  return sum;
}

std::optional<CandidateStar> min_density_star(const Instance& inst,
                                              const DerivedCosts& costs,
                                              const GeneralSolveState& state) {
  const int n = inst.num_nodes();
  Assignment cur(n);
  for (NodeId v = 0; v < n; ++v) cur[v] = costs.q[v] + state.extra[v];

  std::optional<CandidateStar> best;
  std::vector<Rational> increments;
  for (NodeId root = 0; root < n; ++root) {
    const auto incident = inst.incident(root);
    std::vector<Rational> root_steps{Rational(0)};
    for (const EdgeId e : incident) {
      const Rational& t = inst.threshold_at(e, root);
      if (t > cur[root]) root_steps.push_back(t - cur[root]);
    }
    std::sort(root_steps.begin(), root_steps.end());
    root_steps.erase(std::unique(root_steps.begin(), root_steps.end()),
                     root_steps.end());

    const Rational root_gain = inst.is_terminal(root) &&
                                       counts(costs, state.covered, root)
                                   ? costs.c[root]
                                   : Rational(0);
    for (const Rational& w : root_steps) {
      const Rational root_level = cur[root] + w;
      // Cheapest increment b_u for every reachable uncovered terminal u.
      std::vector<StarLeaf> reachable;
      for (const EdgeId e : incident) {
        if (inst.threshold_at(e, root) > root_level) continue;
        const NodeId u = inst.other_end(e, root);
        if (!inst.is_terminal(u) || !counts(costs, state.covered, u)) continue;
        const Rational& tu = inst.threshold_at(e, u);
        const Rational b = tu > cur[u] ? tu - cur[u] : Rational(0);
        auto it = std::find_if(reachable.begin(), reachable.end(),
                               [u](const StarLeaf& l) { return l.terminal == u; });
        if (it == reachable.end()) {
          reachable.push_back({u, b, e});
        } else if (b < it->increment) {
          it->increment = b;
          it->edge = e;
        }
      }
      if (reachable.empty()) continue;
      std::sort(reachable.begin(), reachable.end(),
                [&](const StarLeaf& x, const StarLeaf& y) {
                  const Rational lhs = x.increment * costs.c[y.terminal];
                  const Rational rhs = y.increment * costs.c[x.terminal];
                  if (lhs != rhs) return lhs < rhs;
                  return x.terminal < y.terminal;
                });
      // Add leaves in b/c order while the star density strictly drops; the
      // empty star has density +inf.
      Rational pay = w;
      Rational gain = root_gain;
      std::size_t taken = 0;
      for (const StarLeaf& leaf : reachable) {
        const Rational next_pay = pay + leaf.increment;
        const Rational next_gain = gain + costs.c[leaf.terminal];
        if (taken > 0 && !less_ratio(next_pay, next_gain, pay, gain)) break;
        pay = next_pay;
        gain = next_gain;
        ++taken;
      }
      const Rational density = pay / gain;
      if (!best || density < best->density) {
        CandidateStar star;
        star.root = root;
        star.root_increment = w;
        star.leaves.assign(reachable.begin(), reachable.begin() + taken);
        star.gain = gain;
        star.density = density;
        best = std::move(star);
      }
    }
  }
  return best;
}

GeneralSolveState GeneralGmcProblem::initial_state() const {
  GeneralSolveState state;
  state.extra = Assignment(inst_.num_nodes());
  state.covered = covered_terminals(inst_, current(state));
  return state;
}

Assignment GeneralGmcProblem::current(const GeneralSolveState& state) const {
  Assignment cur(inst_.num_nodes());
  for (NodeId v = 0; v < inst_.num_nodes(); ++v) {
    cur[v] = costs_.q[v] + state.extra[v];
  }
  return cur;
}

Rational GeneralGmcProblem::potential(const GeneralSolveState& state) const {
  Rational nu = costs_.total_q;
  for (const NodeId u : inst_.terminals()) {
    if (!state.covered[u]) nu += costs_.c[u];
  }
  return nu;
}

std::optional<GmcProposal<CandidateStar>>
GeneralGmcProblem::min_density_augmentation(
    const GeneralSolveState& state) const {
  auto star = min_density_star(inst_, costs_, state);
  if (!star) return std::nullopt;
  GeneralSolveState next = state;
  apply(next, *star);
  GmcProposal<CandidateStar> proposal;
  proposal.payment = star->payment();
  proposal.potential_after = potential(next);
  proposal.augmentation = std::move(*star);
  return proposal;
}

void GeneralGmcProblem::apply(GeneralSolveState& state,
                              const CandidateStar& star) const {
  state.extra[star.root] += star.root_increment;
  for (const StarLeaf& leaf : star.leaves) {
    state.extra[leaf.terminal] += leaf.increment;
  }
  state.covered = covered_terminals(inst_, current(state));
}

Assignment complete(const Instance& inst, const DerivedCosts& costs,
                    const GeneralSolveState& state) {
  Assignment a(inst.num_nodes());
  for (NodeId v = 0; v < inst.num_nodes(); ++v) {
    a[v] = costs.q[v] + state.extra[v];
  }
  std::vector<bool> covered = covered_terminals(inst, a);
  for (const NodeId u : inst.terminals()) {
    if (covered[u]) continue;
    const auto incident = inst.incident(u);
    if (incident.empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "terminal '" + inst.name(u) + "' cannot be covered");
    }
    const Rational cheapest = costs.q[u] + costs.c[u];
    for (const EdgeId e : incident) {
      const Edge& edge = inst.edge(e);
      if (edge.tu + edge.tv != cheapest) continue;
      a.raise_to(edge.u, edge.tu);
      a.raise_to(edge.v, edge.tv);
      if (inst.is_terminal(edge.u)) covered[edge.u] = true;
      if (inst.is_terminal(edge.v)) covered[edge.v] = true;
      break;
    }
  }
  return a;
}

GeneralRun run_general(const Instance& inst) {
  GeneralRun run;
  try {
    run.costs = derive_costs(inst);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIsolatedTerminal) {
      throw Error(ErrorCode::kInfeasible, e.what());
    }
    throw;
  }
  const GeneralGmcProblem problem(inst, run.costs);
  auto [state, trace] = gmc_greedy(problem);
  run.report.algorithm = "general";
  run.report.assignment = complete(inst, run.costs, state);
  run.report.value = run.report.assignment.total();
  run.report.theta = run.costs.theta;
  run.report.delta = run.costs.delta;
  const ClaimedBound bound = general_bound(run.costs.theta, run.costs.delta,
                                           inst.terminals_independent());
  run.report.claimed_bound = bound.value;
  run.report.bound_name = bound.name;
  run.report.trace = std::move(trace);
  run.final_state = std::move(state);
  return run;
}

SolveReport solve_general(const Instance& inst) {
  return run_general(inst).report;
}

}  // namespace aec

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

// Greedy for general thresholds. The instance is recast as Generalized
// Min-Covering over augmentations `a` of the base assignment q:
//
//   payment   tau(a) = a(V)
//   potential nu(a)  = Q + c(terminals not covered by q + a)
//
// Each greedy step activates a minimum-density proper star (a root plus
// terminal leaves). Terminals left uncovered at the end are completed with
// their cheapest edge, which costs at most their c.

#ifndef AEC_GENERAL_SOLVER_H_
#define AEC_GENERAL_SOLVER_H_

#include <optional>
#include <vector>

#include "aec/gmc.h"
#include "aec/instance.h"
#include "aec/solve_report.h"

namespace aec {

struct StarLeaf {
  NodeId terminal = 0;
  Rational increment;
  EdgeId edge = 0;
};

struct CandidateStar {
  NodeId root = 0;
  Rational root_increment;
  std::vector<StarLeaf> leaves;
  Rational gain;     // c of the newly covered terminals (root included)
  Rational density;  // (root_increment + sum of leaf increments) / gain

  Rational payment() const;
};

struct GeneralSolveState {
  Assignment extra;            // the augmentation a
  std::vector<bool> covered;   // terminals covered by q + a
};

class GeneralGmcProblem
    : public GmcProblem<GeneralSolveState, CandidateStar> {
 public:
  GeneralGmcProblem(const Instance& inst, const DerivedCosts& costs)
      : inst_(inst), costs_(costs) {}

  GeneralSolveState initial_state() const override;
  Rational potential(const GeneralSolveState& state) const override;
  Rational target() const override { return costs_.total_q; }
  std::optional<GmcProposal<CandidateStar>> min_density_augmentation(
      const GeneralSolveState& state) const override;
  void apply(GeneralSolveState& state,
             const CandidateStar& star) const override;

  // q + state.extra.
  Assignment current(const GeneralSolveState& state) const;

 private:
  const Instance& inst_;
  const DerivedCosts& costs_;
};

// Minimum-density proper star w.r.t. the assignment q + state.extra, or
// nullopt when no star covers a terminal with positive c. Ties are broken
// by (root id, root increment).
std::optional<CandidateStar> min_density_star(const Instance& inst,
                                              const DerivedCosts& costs,
                                              const GeneralSolveState& state);

// Covers every still-uncovered terminal by its minimum-value edge and
// returns the feasible assignment q + extra + completion.
Assignment complete(const Instance& inst, const DerivedCosts& costs,
                    const GeneralSolveState& state);

struct GeneralRun {
  SolveReport report;
  DerivedCosts costs;
  GeneralSolveState final_state;
};

// Throws Error(kInfeasible) if a terminal has no incident edge.
GeneralRun run_general(const Instance& inst);
SolveReport solve_general(const Instance& inst);

}  // namespace aec

#endif  // AEC_GENERAL_SOLVER_H_

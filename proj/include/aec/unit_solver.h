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

// Unit thresholds (every edge needs value 1 at both ends). Every terminal
// pays 1, edges between two terminals then come for free, and what is left
// is an unweighted set cover: non-terminals are sets over the remaining
// terminals. Solution value = |R| + |chosen non-terminals|.

#ifndef AEC_UNIT_SOLVER_H_
#define AEC_UNIT_SOLVER_H_

#include <vector>

#include "aec/instance.h"
#include "aec/set_cover.h"
#include "aec/solve_report.h"

namespace aec {

struct UnitResidual {
  int num_nodes = 0;
  std::vector<NodeId> terminals;
  std::vector<NodeId> precovered;     // touched by a terminal-terminal edge
  std::vector<NodeId> element_nodes;  // residual terminal of each element
  std::vector<NodeId> set_nodes;      // non-terminal of each set
  SetSystem system;
  int base_value = 0;  // |R|

  // Value of the assignment 1 on R and on the chosen sets' nodes.
  Assignment assignment(const std::vector<int>& chosen_sets) const;
};

// Throws Error(kNotUnitThresholds) unless all thresholds are 1, and
// Error(kInfeasible) for a residual terminal with no non-terminal neighbour.
UnitResidual reduce_unit(const Instance& inst);

// Repeatedly takes a maximum star with at least 3 uncovered terminals
// (lowest id on ties) and finishes the size <= 2 remainder exactly.
SolveReport algorithm1(const UnitResidual& res);

// One scan in set order claiming every set with exactly k+1 live elements.
// Once no set has more than k+1 live elements this is a maximal collection
// of disjoint (k+1)-stars. Updates `alive` and `removed`; returns the roots.
std::vector<int> extract_stars(const SetSystem& system, int k,
                               std::vector<bool>& alive,
                               std::vector<bool>& removed);

// For k = delta down to 0: remove a maximal collection of disjoint
// (k+1)-stars, and for k <= 6 cover the rest with `subsolver`; returns the
// smallest star-roots-plus-cover candidate.
SolveReport algorithm2(const UnitResidual& res,
                       const KSetCoverSolver& subsolver);

}  // namespace aec

#endif  // AEC_UNIT_SOLVER_H_

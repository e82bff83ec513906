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

// Exact optimum for small instances.
//
// Any inclusion-minimal feasible assignment is the pointwise maximum of the
// thresholds of one covering edge per terminal, so it suffices to branch on
// an edge choice per terminal. Terminals are visited in order of increasing
// degree and skipped once an earlier choice already covers them.

#ifndef AEC_ORACLE_H_
#define AEC_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "aec/instance.h"

namespace aec {

struct ExactLimits {
  int max_terminals = 10;
  int max_nodes = 64;
  double time_budget_seconds = 60.0;
};

struct ExactResult {
  Rational value;
  Assignment assignment;
  // Per node; for terminals the edge that covers them.
  std::vector<std::optional<EdgeId>> choice;
  std::int64_t nodes_expanded = 0;
  bool optimal = false;  // false when the time budget ran out
};

// Throws Error(kLimitExceeded) when the instance is larger than `limits`
// allow (unless `force`), Error(kInfeasible) for a terminal without edges.
ExactResult exact_solve(const Instance& inst, const ExactLimits& limits = {},
                        bool force = false);

struct Star {
  NodeId root = 0;
  std::vector<NodeId> leaves;
  std::vector<EdgeId> edges;
};

// Node-disjoint stars of an inclusion-minimal cover activated by the
// result's assignment. Leaves are terminals; a root may be a terminal too.
std::vector<Star> exact_star_decomposition(const Instance& inst,
                                           const ExactResult& result);

}  // namespace aec

#endif  // AEC_ORACLE_H_

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

// Monotone activation functions over finite level sets, and their expansion
// into plain threshold edges.

#ifndef AEC_ACTIVATION_H_
#define AEC_ACTIVATION_H_

#include <string>
#include <variant>
#include <vector>

#include "aec/instance.h"
#include "aec/rational.h"

namespace aec {

// active[i][j] tells whether levels (L_u[i], L_v[j]) activate the pair. A
// node at value 0 that is not one of its levels activates no table pair.
struct ActivationTable {
  std::vector<std::vector<bool>> active;
};

// Activated when gamma_uv * a_u + gamma_vu * a_v >= demand.
struct InstallationRecord {
  Rational demand;
  Rational gamma_uv;
  Rational gamma_vu;
};

struct ActivationPair {
  NodeId u = 0;
  NodeId v = 0;
  std::variant<ActivationTable, InstallationRecord> predicate;
};

// A node may always stay at value 0; `levels[v]` lists the other values it
// may take (strictly ascending, non-negative, non-empty).
struct ActivationSpec {
  std::vector<std::string> nodes;
  std::vector<std::vector<Rational>> levels;
  std::vector<ActivationPair> pairs;
};

bool pair_active(const ActivationSpec& spec, const ActivationPair& pair,
                 int level_u, int level_v);

// One threshold edge per Pareto-minimal activating pair of values in
// {0} and the level lists. Throws
// Error(kEmptyLevels) for a node without levels and Error(kNonMonotone) for
// a table that is not monotone non-decreasing.
Instance levels_reduction(const ActivationSpec& spec,
                          const std::vector<NodeId>& terminals);

}  // namespace aec

#endif  // AEC_ACTIVATION_H_

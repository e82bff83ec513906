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

// Unweighted set cover on small set systems, and the k-set-cover subsolvers
// used by the unit-threshold algorithms.

#ifndef AEC_SET_COVER_H_
#define AEC_SET_COVER_H_

#include <optional>
#include <string>
#include <vector>

#include "aec/rational.h"

namespace aec {

// Elements are 0..num_elements-1; each set is a sorted element list.
struct SetSystem {
  int num_elements = 0;
  std::vector<std::vector<int>> sets;

  int max_set_size() const;
  // Sets restricted to the elements with alive[e] set, renumbered densely.
  // `element_map` receives the old index of each new element.
  SetSystem restrict_to(const std::vector<bool>& alive,
                        std::vector<int>* element_map) const;
};

struct SetCoverSolution {
  std::vector<int> chosen;  // sorted set indices
  bool covers = false;
};

bool is_cover(const SetSystem& system, const std::vector<int>& chosen);

// Minimum cover when every set has at most two elements: |elements| minus a
// maximum matching of the graph joining elements that share a set.
// Throws Error(kSizeBoundViolated) for larger sets and Error(kInfeasible)
// for an element that no set contains.
SetCoverSolution exact_2setcover(const SetSystem& system);

class KSetCoverSolver {
 public:
  virtual ~KSetCoverSolver() = default;
  virtual std::string name() const = 0;
  // Requires every set to have at most k elements (else
  // Error(kSizeBoundViolated)).
  virtual SetCoverSolution solve(const SetSystem& system, int k) const = 0;
  // Proven approximation factor on k-set-cover, if any.
  virtual std::optional<Rational> ratio(int k) const = 0;
};

// Branch and bound on the uncovered element with fewest sets, with the
// bound ceil(remaining / k) and a memo of the best depth per covered set.
class ExactBranchAndBound : public KSetCoverSolver {
 public:
  std::string name() const override { return "exact-bb"; }
  SetCoverSolution solve(const SetSystem& system, int k) const override;
  std::optional<Rational> ratio(int) const override { return Rational(1); }
};

// Classical greedy: largest number of uncovered elements, lowest index on
// ties. Ratio H_k.
class GreedyHarmonic : public KSetCoverSolver {
 public:
  std::string name() const override { return "greedy-hk"; }
  SetCoverSolution solve(const SetSystem& system, int k) const override;
  std::optional<Rational> ratio(int k) const override;
};

// exact_2setcover behind the subsolver interface; k <= 2 only.
class Matching2 : public KSetCoverSolver {
 public:
  std::string name() const override { return "matching2"; }
  SetCoverSolution solve(const SetSystem& system, int k) const override;
  std::optional<Rational> ratio(int) const override { return Rational(1); }
};

}  // namespace aec

#endif  // AEC_SET_COVER_H_

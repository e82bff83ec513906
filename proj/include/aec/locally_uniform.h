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

// Average-price greedy for bipartite instances whose facilities (the
// non-terminals) are locally uniform: facility v has one weight w_v on its
// side of every edge and one service threshold t_v on the client side.

#ifndef AEC_LOCALLY_UNIFORM_H_
#define AEC_LOCALLY_UNIFORM_H_

#include <vector>

#include "aec/instance.h"
#include "aec/solve_report.h"

namespace aec {

struct UniformBipartiteInstance {
  int num_nodes = 0;
  std::vector<NodeId> clients;
  std::vector<NodeId> facilities;  // non-terminals with at least one edge
  std::vector<Rational> weight;    // per node, facilities only
  std::vector<Rational> service;   // per node, facilities only
  std::vector<std::vector<NodeId>> neighbors;  // per node, sorted
  Slope theta;  // max w_v / t_v over facilities
  int delta = 0;
};

// Throws Error(kNotBipartite) when an edge joins two terminals or two
// non-terminals, Error(kNonUniformFacility) when a facility's edges carry
// different threshold pairs.
UniformBipartiteInstance validate_locally_uniform(const Instance& inst);

struct TieBreak {
  enum class Kind { kLowestId, kAdversarialOrder };
  Kind kind = Kind::kLowestId;
  // Facility priority for kAdversarialOrder; unlisted facilities follow in
  // id order.
  std::vector<NodeId> priority;

  static TieBreak lowest_id() { return {}; }
  static TieBreak adversarial(std::vector<NodeId> order) {
    return {Kind::kAdversarialOrder, std::move(order)};
  }
};

struct LocallyUniformRun {
  SolveReport report;
  std::vector<NodeId> picks;   // facilities in the order chosen
  std::vector<Rational> price;  // per node: average price paid by a client
};

// Throws Error(kInfeasible) if a client has no facility neighbour.
LocallyUniformRun run_locally_uniform(const UniformBipartiteInstance& ubi,
                                      const TieBreak& tie_break = {});
SolveReport solve_locally_uniform(const UniformBipartiteInstance& ubi,
                                  const TieBreak& tie_break = {});

}  // namespace aec

#endif  // AEC_LOCALLY_UNIFORM_H_

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

#include "aec/set_cover.h"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include "aec/error.h"

namespace aec {
namespace {

void check_coverable(const SetSystem& system) {
  std::vector<bool> seen(system.num_elements, false);
  for (const auto& set : system.sets) {
    for (const int e : set) seen[e] = true;
  }
  for (int e = 0; e < system.num_elements; ++e) {
    if (!seen[e]) {
      throw Error(ErrorCode::kInfeasible,
                  "element " + std::to_string(e) + " is in no set");
    }
  }
}

void check_size_bound(const SetSystem& system, int k) {
  if (system.max_set_size() > k) {
    throw Error(ErrorCode::kSizeBoundViolated,
                "a set has more than " + std::to_string(k) + " elements");
  }
}

using Bits = std::vector<std::uint64_t>;

struct BitsHash {
  std::size_t operator()(const Bits& bits) const {
    std::size_t h = 1469598103934665603ull;
    for (const std::uint64_t word : bits) {
      h ^= std::hash<std::uint64_t>{}(word) + 0x9e3779b97f4a7c15ull +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

bool test_bit(const Bits& bits, int i) { return (bits[i / 64] >> (i % 64)) & 1; }
void set_bit(Bits& bits, int i) { bits[i / 64] |= std::uint64_t{1} << (i % 64); }

class BranchAndBound {
 public:
  BranchAndBound(const SetSystem& system, int k)
      : system_(system), k_(std::max(k, 1)) {
    containing_.assign(system.num_elements, {});
    for (int s = 0; s < static_cast<int>(system.sets.size()); ++s) {
      for (const int e : system.sets[s]) containing_[e].push_back(s);
    }
  }

  std::vector<int> solve(std::vector<int> incumbent) {
    best_ = std::move(incumbent);
    Bits covered((system_.num_elements + 63) / 64, 0);
    search(covered, system_.num_elements);
    return best_;
  }

 private:
  void search(const Bits& covered, int remaining) {
    const int depth = static_cast<int>(path_.size());
    if (remaining == 0) {
      if (depth < static_cast<int>(best_.size())) best_ = path_;
      return;
    }
    if (depth + (remaining + k_ - 1) / k_ >= static_cast<int>(best_.size())) {
      return;
    }
    auto [it, inserted] = memo_.try_emplace(covered, depth);
    if (!inserted) {
      if (it->second <= depth) return;
      it->second = depth;
    }
    int pivot = -1;
    for (int e = 0; e < system_.num_elements; ++e) {
      if (test_bit(covered, e)) continue;
      if (pivot < 0 || containing_[e].size() < containing_[pivot].size()) {
        pivot = e;
      }
    }
    for (const int s : containing_[pivot]) {
      Bits next = covered;
      int newly = 0;
      for (const int e : system_.sets[s]) {
        if (!test_bit(next, e)) {
          set_bit(next, e);
          ++newly;
        }
      }
      path_.push_back(s);
      search(next, remaining - newly);
      path_.pop_back();
    }
  }

  const SetSystem& system_;
  int k_;
  std::vector<std::vector<int>> containing_;
  std::vector<int> path_;
  std::vector<int> best_;
  std::unordered_map<Bits, int, BitsHash> memo_;
};

std::vector<int> greedy_cover(const SetSystem& system) {
  std::vector<bool> covered(system.num_elements, false);
  int remaining = system.num_elements;
  std::vector<int> chosen;
  while (remaining > 0) {
    int best = -1;
    int best_gain = 0;
    for (int s = 0; s < static_cast<int>(system.sets.size()); ++s) {
      int gain = 0;
      for (const int e : system.sets[s]) gain += covered[e] ? 0 : 1;
      if (gain > best_gain) {
        best = s;
        best_gain = gain;
      }
    }
    if (best < 0) {
      throw Error(ErrorCode::kInfeasible, "set system has no cover");
    }
    chosen.push_back(best);
    for (const int e : system.sets[best]) {
      if (!covered[e]) {
        covered[e] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

SetCoverSolution finish(const SetSystem& system, std::vector<int> chosen) {
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  SetCoverSolution solution;
  solution.covers = is_cover(system, chosen);
  solution.chosen = std::move(chosen);
  return solution;
}

}  // namespace

int SetSystem::max_set_size() const {
  std::size_t best = 0;
  for (const auto& set : sets) best = std::max(best, set.size());
  return static_cast<int>(best);
}

SetSystem SetSystem::restrict_to(const std::vector<bool>& alive,
                                 std::vector<int>* element_map) const {
  std::vector<int> renumber(num_elements, -1);
  SetSystem out;
  if (element_map != nullptr) element_map->clear();
  for (int e = 0; e < num_elements; ++e) {
    if (!alive[e]) continue;
    renumber[e] = out.num_elements++;
    if (element_map != nullptr) element_map->push_back(e);
  }
  out.sets.reserve(sets.size());
  for (const auto& set : sets) {
    std::vector<int> kept;
    for (const int e : set) {
      if (renumber[e] >= 0) kept.push_back(renumber[e]);
    }
    out.sets.push_back(std::move(kept));
  }
  return out;
}

bool is_cover(const SetSystem& system, const std::vector<int>& chosen) {
  std::vector<bool> covered(system.num_elements, false);
  for (const int s : chosen) {
    for (const int e : system.sets[s]) covered[e] = true;
  }
  return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

SetCoverSolution exact_2setcover(const SetSystem& system) {
  check_size_bound(system, 2);
  check_coverable(system);
  using Graph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
  const int m = system.num_elements;
  Graph graph(m);
  // Lowest set index realizing each pair; first set containing each element.
  std::vector<std::vector<int>> pair_set(m, std::vector<int>(m, -1));
  std::vector<int> any_set(m, -1);
  for (int s = 0; s < static_cast<int>(system.sets.size()); ++s) {
    const auto& set = system.sets[s];
    for (const int e : set) {
      if (any_set[e] < 0) any_set[e] = s;
    }
    if (set.size() == 2 && pair_set[set[0]][set[1]] < 0) {
      pair_set[set[0]][set[1]] = pair_set[set[1]][set[0]] = s;
      boost::add_edge(set[0], set[1], graph);
    }
  }
  std::vector<Vertex> mate(m);
  boost::edmonds_maximum_cardinality_matching(graph, mate.data());
  const Vertex unmatched = boost::graph_traits<Graph>::null_vertex();
  std::vector<int> chosen;
  for (int e = 0; e < m; ++e) {
    if (mate[e] == unmatched) {
      chosen.push_back(any_set[e]);
    } else if (static_cast<int>(mate[e]) > e) {
      chosen.push_back(pair_set[e][mate[e]]);
    }
  }
  return finish(system, std::move(chosen));
}

SetCoverSolution ExactBranchAndBound::solve(const SetSystem& system,
                                            int k) const {
  check_size_bound(system, k);
  check_coverable(system);
  BranchAndBound search(system, k);
  return finish(system, search.solve(greedy_cover(system)));
}

SetCoverSolution GreedyHarmonic::solve(const SetSystem& system, int k) const {
  check_size_bound(system, k);
  check_coverable(system);
  return finish(system, greedy_cover(system));
}

std::optional<Rational> GreedyHarmonic::ratio(int k) const {
  Rational h(0);
  for (int i = 1; i <= k; ++i) h += Rational(1, i);
  return h;
}

SetCoverSolution Matching2::solve(const SetSystem& system, int k) const {
  if (k > 2) {
    throw Error(ErrorCode::kSizeBoundViolated,
                "matching2 handles k <= 2 only");
  }
  check_size_bound(system, k);
  return exact_2setcover(system);
}

}  // namespace aec

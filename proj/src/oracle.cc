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

#include "aec/oracle.h"

#include <algorithm>
#include <chrono>
#include <utility>

#include "aec/error.h"

namespace aec {
namespace {

class ExactSearch {
 public:
  ExactSearch(const Instance& inst, const DerivedCosts& costs,
              double time_budget_seconds)
      : inst_(inst),
        costs_(costs),
        current_(inst.num_nodes()),
        deadline_(std::chrono::steady_clock::now() +
                  std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                      std::chrono::duration<double>(time_budget_seconds))) {
    order_ = inst.terminals();
    std::stable_sort(order_.begin(), order_.end(), [&](NodeId a, NodeId b) {
      return inst.incident(a).size() < inst.incident(b).size();
    });
  }

  void run(const Assignment& incumbent) {
    best_ = incumbent;
    best_value_ = incumbent.total();
    search(0);
  }

  const Assignment& best() const { return best_; }
  std::int64_t expanded() const { return expanded_; }
  bool timed_out() const { return timed_out_; }

 private:
  bool is_covered(NodeId u) const {
    for (const EdgeId e : inst_.incident(u)) {
      const Edge& edge = inst_.edge(e);
      if (current_[edge.u] >= edge.tu && current_[edge.v] >= edge.tv) {
        return true;
      }
    }
    return false;
  }

  Rational increment(EdgeId e) const {
    const Edge& edge = inst_.edge(e);
    Rational inc;
    if (edge.tu > current_[edge.u]) inc += edge.tu - current_[edge.u];
    if (edge.tv > current_[edge.v]) inc += edge.tv - current_[edge.v];
    return inc;
  }

  // Uncovered terminals are distinct nodes, so their own deficits add up;
  // any single terminal's cheapest completion is also a bound.
  Rational lower_bound(std::size_t pos) const {
    Rational own;
    Rational single;
    for (std::size_t i = pos; i < order_.size(); ++i) {
      const NodeId u = order_[i];
      if (is_covered(u)) continue;
      if (costs_.q[u] > current_[u]) own += costs_.q[u] - current_[u];
      std::optional<Rational> cheapest;
      for (const EdgeId e : inst_.incident(u)) {
        const Rational inc = increment(e);
        if (!cheapest || inc < *cheapest) cheapest = inc;
      }
      single = max(single, *cheapest);
    }
    return value_ + max(own, single);
  }

  void search(std::size_t pos) {
    if (timed_out_) return;
    if ((++expanded_ & 4095) == 0 &&
        std::chrono::steady_clock::now() > deadline_) {
      timed_out_ = true;
      return;
    }
    while (pos < order_.size() && is_covered(order_[pos])) ++pos;
    if (pos == order_.size()) {
      if (value_ < best_value_) {
        best_value_ = value_;
        best_ = current_;
      }
      return;
    }
    if (lower_bound(pos) >= best_value_) return;
    const NodeId u = order_[pos];
    for (const EdgeId e : inst_.incident(u)) {
      const Edge& edge = inst_.edge(e);
      const Rational old_u = current_[edge.u];
      const Rational old_v = current_[edge.v];
      const Rational inc = increment(e);
      if (value_ + inc >= best_value_) continue;
      current_.raise_to(edge.u, edge.tu);
      current_.raise_to(edge.v, edge.tv);
      value_ += inc;
      search(pos + 1);
      value_ -= inc;
      current_[edge.u] = old_u;
      current_[edge.v] = old_v;
      if (timed_out_) return;
    }
  }

  const Instance& inst_;
  const DerivedCosts& costs_;
  std::vector<NodeId> order_;
  Assignment current_;
  Rational value_;
  Assignment best_;
  Rational best_value_;
  std::int64_t expanded_ = 0;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

ExactResult exact_solve(const Instance& inst, const ExactLimits& limits,
                        bool force) {
  const int num_terminals = static_cast<int>(inst.terminals().size());
  if (!force && (num_terminals > limits.max_terminals ||
                 inst.num_nodes() > limits.max_nodes)) {
    throw Error(ErrorCode::kLimitExceeded,
                std::to_string(num_terminals) + " terminals / " +
                    std::to_string(inst.num_nodes()) +
                    " nodes exceed the exact-solver limits");
  }
  DerivedCosts costs;
  try {
    costs = derive_costs(inst);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kIsolatedTerminal) {
      throw Error(ErrorCode::kInfeasible, e.what());
    }
    throw;
  }

  ExactSearch search(inst, costs, limits.time_budget_seconds);
  search.run(cheapest_edge_cover(inst, costs));

  ExactResult result;
  result.assignment = search.best();
  result.value = result.assignment.total();
  result.nodes_expanded = search.expanded();
  result.optimal = !search.timed_out();
  result.choice.assign(inst.num_nodes(), std::nullopt);
  for (const NodeId u : inst.terminals()) {
    for (const EdgeId e : inst.incident(u)) {
      if (is_activated(inst, result.assignment, e)) {
        result.choice[u] = e;
        break;
      }
    }
  }
  return result;
}

std::vector<Star> exact_star_decomposition(const Instance& inst,
                                           const ExactResult& result) {
  const int n = inst.num_nodes();
  std::vector<EdgeId> cover;
  std::vector<int> times_covered(n, 0);
  auto touch = [&](EdgeId e, int delta) {
    const Edge& edge = inst.edge(e);
    if (inst.is_terminal(edge.u)) times_covered[edge.u] += delta;
    if (inst.is_terminal(edge.v)) times_covered[edge.v] += delta;
  };
  for (const NodeId u : inst.terminals()) {
    if (times_covered[u] > 0 || !result.choice[u]) continue;
    cover.push_back(*result.choice[u]);
    touch(*result.choice[u], +1);
  }
  // Drop edges whose terminal endpoints are all covered elsewhere.
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = cover.size(); i-- > 0;) {
      const Edge& edge = inst.edge(cover[i]);
      const bool needed_u = inst.is_terminal(edge.u) && times_covered[edge.u] == 1;
      const bool needed_v = inst.is_terminal(edge.v) && times_covered[edge.v] == 1;
      if (needed_u || needed_v) continue;
      touch(cover[i], -1);
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
      changed = true;
    }
  }

  std::vector<int> degree(n, 0);
  for (const EdgeId e : cover) {
    ++degree[inst.edge(e).u];
    ++degree[inst.edge(e).v];
  }
  std::vector<int> star_of(n, -1);
  std::vector<Star> stars;
  for (const EdgeId e : cover) {
    const Edge& edge = inst.edge(e);
    NodeId root;
    if (degree[edge.u] > 1) {
      root = edge.u;
    } else if (degree[edge.v] > 1) {
      root = edge.v;
    } else if (!inst.is_terminal(edge.u)) {
      root = edge.u;
    } else if (!inst.is_terminal(edge.v)) {
      root = edge.v;
    } else {
      root = std::min(edge.u, edge.v);
    }
    const NodeId leaf = edge.u == root ? edge.v : edge.u;
    if (star_of[root] < 0) {
      star_of[root] = static_cast<int>(stars.size());
      stars.push_back({root, {}, {}});
    }
    Star& star = stars[star_of[root]];
    star.leaves.push_back(leaf);
    star.edges.push_back(e);
  }
  for (Star& star : stars) {
    std::sort(star.leaves.begin(), star.leaves.end());
  }
  std::sort(stars.begin(), stars.end(),
            [](const Star& a, const Star& b) { return a.root < b.root; });
  return stars;
}

}  // namespace aec

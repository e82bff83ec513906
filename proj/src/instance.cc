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

#include "aec/instance.h"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

#include "aec/error.h"

namespace aec {

Instance::Instance(std::vector<std::string> node_names,
                   std::vector<NodeId> terminals, std::vector<Edge> edges)
    : names_(std::move(node_names)) {
  const int n = num_nodes();
  for (NodeId v = 0; v < n; ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw Error(ErrorCode::kInvalidInstance,
                  "duplicate node name '" + names_[v] + "'");
    }
  }
  is_terminal_.assign(n, false);
  for (const NodeId t : terminals) {
    if (t < 0 || t >= n) {
      throw Error(ErrorCode::kInvalidInstance, "terminal id out of range");
    }
    is_terminal_[t] = true;
  }
  for (NodeId v = 0; v < n; ++v) {
    if (is_terminal_[v]) terminals_.push_back(v);
  }

  for (Edge& e : edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw Error(ErrorCode::kInvalidInstance, "edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidInstance,
                  "self-loop at '" + names_[e.u] + "'");
    }
    if (e.tu < 0 || e.tv < 0) {
      throw Error(ErrorCode::kInvalidInstance, "negative threshold");
    }
    if (e.u > e.v) {
      std::swap(e.u, e.v);
      std::swap(e.tu, e.tv);
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    if (a.tu != b.tu) return a.tu < b.tu;
    return a.tv < b.tv;
  });
  // Within a parallel class tu is non-decreasing, so an edge survives iff
  // its tv is strictly below every tv kept before it.
  for (std::size_t i = 0; i < edges.size();) {
    std::size_t j = i;
    std::optional<Rational> best_tv;
    while (j < edges.size() && edges[j].u == edges[i].u &&
           edges[j].v == edges[i].v) {
      if (!best_tv || edges[j].tv < *best_tv) {
        best_tv = edges[j].tv;
        edges_.push_back(edges[j]);
      }
      ++j;
    }
    i = j;
  }

  incident_.assign(n, {});
  for (EdgeId e = 0; e < num_edges(); ++e) {
    incident_[edges_[e].u].push_back(e);
    incident_[edges_[e].v].push_back(e);
  }
}

Instance Instance::from_names(std::vector<std::string> node_names,
                              const std::vector<std::string>& terminals,
                              const std::vector<NamedEdge>& edges) {
  std::unordered_map<std::string, NodeId> index;
  for (NodeId v = 0; v < static_cast<NodeId>(node_names.size()); ++v) {
    index.emplace(node_names[v], v);
  }
  auto lookup = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorCode::kInvalidInstance, "unknown node '" + name + "'");
    }
    return it->second;
  };
  std::vector<NodeId> terminal_ids;
  std::set<std::string> seen;
  for (const std::string& t : terminals) {
    if (!seen.insert(t).second) {
      throw Error(ErrorCode::kInvalidInstance, "duplicate terminal '" + t + "'");
    }
    terminal_ids.push_back(lookup(t));
  }
  std::vector<Edge> edge_list;
  edge_list.reserve(edges.size());
  for (const NamedEdge& e : edges) {
    edge_list.push_back({lookup(e.u), lookup(e.v), e.tu, e.tv});
  }
  return Instance(std::move(node_names), std::move(terminal_ids),
                  std::move(edge_list));
}

NodeId Instance::id(std::string_view name) const {
  const auto it = index_.find(std::string(name));
  if (it == index_.end()) {
    throw Error(ErrorCode::kInvalidInstance,
                "unknown node '" + std::string(name) + "'");
  }
  return it->second;
}

bool Instance::terminals_independent() const {
  return std::none_of(edges_.begin(), edges_.end(), [this](const Edge& e) {
    return is_terminal_[e.u] && is_terminal_[e.v];
  });
}

bool Instance::all_thresholds_equal(const Rational& value) const {
  return std::all_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return e.tu == value && e.tv == value;
  });
}

Rational Assignment::raise_to(NodeId v, const Rational& level) {
  if (values_[v] >= level) return Rational(0);
  Rational increase = level - values_[v];
  values_[v] = level;
  return increase;
}

Rational Assignment::total() const {
  Rational sum;
  for (const Rational& x : values_) sum += x;
  return sum;
}

Assignment& Assignment::operator+=(const Assignment& other) {
  if (values_.size() < other.values_.size()) {
    values_.resize(other.values_.size());
  }
  for (std::size_t i = 0; i < other.values_.size(); ++i) {
    values_[i] += other.values_[i];
  }
  return *this;
}

double Slope::to_double() const {
  return value_ ? value_->to_double()
                : std::numeric_limits<double>::infinity();
}

std::string Slope::str() const { return value_ ? value_->str() : "inf"; }

DerivedCosts derive_costs(const Instance& inst) {
  const int n = inst.num_nodes();
  DerivedCosts costs;
  costs.q.assign(n, Rational(0));
  costs.c.assign(n, Rational(0));
  bool infinite = false;
  Rational theta(0);
  for (const NodeId u : inst.terminals()) {
    const auto incident = inst.incident(u);
    if (incident.empty()) {
      throw Error(ErrorCode::kIsolatedTerminal,
                  "terminal '" + inst.name(u) + "' has no incident edge");
    }
    Rational q = inst.threshold_at(incident.front(), u);
    Rational cheapest = inst.edge(incident.front()).tu +
                        inst.edge(incident.front()).tv;
    for (const EdgeId e : incident) {
      q = min(q, inst.threshold_at(e, u));
      cheapest = min(cheapest, inst.edge(e).tu + inst.edge(e).tv);
    }
    costs.q[u] = q;
    costs.c[u] = cheapest - q;
    costs.total_q += q;
    costs.total_c += costs.c[u];
    if (q.is_zero()) {
      if (!costs.c[u].is_zero()) infinite = true;
    } else {
      theta = max(theta, costs.c[u] / q);
    }
  }
  costs.theta = infinite ? Slope::infinite() : Slope(theta);

  std::vector<int> mark(n, -1);
  for (NodeId v = 0; v < n; ++v) {
    int count = 0;
    for (const EdgeId e : inst.incident(v)) {
      const NodeId w = inst.other_end(e, v);
      if (inst.is_terminal(w) && mark[w] != v) {
        mark[w] = v;
        ++count;
      }
    }
    costs.delta = std::max(costs.delta, count);
  }
  return costs;
}

bool is_activated(const Instance& inst, const Assignment& a, EdgeId e) {
  const Edge& edge = inst.edge(e);
  return a[edge.u] >= edge.tu && a[edge.v] >= edge.tv;
}

std::vector<EdgeId> activated_edges(const Instance& inst,
                                    const Assignment& a) {
  std::vector<EdgeId> result;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    if (is_activated(inst, a, e)) result.push_back(e);
  }
  return result;
}

std::vector<bool> covered_terminals(const Instance& inst,
                                    const Assignment& a) {
  std::vector<bool> covered(inst.num_nodes(), false);
  for (EdgeId e = 0; e < inst.num_edges(); ++e) {
    if (!is_activated(inst, a, e)) continue;
    const Edge& edge = inst.edge(e);
    if (inst.is_terminal(edge.u)) covered[edge.u] = true;
    if (inst.is_terminal(edge.v)) covered[edge.v] = true;
  }
  return covered;
}

CoverCheck covers(const Instance& inst, const Assignment& a) {
  const std::vector<bool> covered = covered_terminals(inst, a);
  CoverCheck check;
  for (const NodeId u : inst.terminals()) {
    if (!covered[u]) check.uncovered.push_back(u);
  }
  check.covered = check.uncovered.empty();
  return check;
}

Assignment cheapest_edge_cover(const Instance& inst,
                               const DerivedCosts& costs) {
  Assignment a(inst.num_nodes());
  for (const NodeId u : inst.terminals()) a[u] = costs.q[u];
  for (const NodeId u : inst.terminals()) {
    for (const EdgeId e : inst.incident(u)) {
      if (inst.edge(e).tu + inst.edge(e).tv == costs.q[u] + costs.c[u]) {
        a.raise_to(inst.edge(e).u, inst.edge(e).tu);
        a.raise_to(inst.edge(e).v, inst.edge(e).tv);
        break;
      }
    }
  }
  return a;
}

}  // namespace aec

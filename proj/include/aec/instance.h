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

// Activation Edge-Cover instances: a multigraph whose edges carry one
// activation threshold per endpoint, plus a set of terminals that must each
// be touched by an activated edge.

#ifndef AEC_INSTANCE_H_
#define AEC_INSTANCE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "aec/rational.h"

namespace aec {

using NodeId = int;
using EdgeId = int;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  Rational tu;  // threshold at u
  Rational tv;  // threshold at v

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable after construction. Edges are oriented so that u < v, sorted by
// (u, v, tu, tv), and parallel edges dominated by another parallel edge
// (both thresholds >=) are dropped. Node ids are positions in the node list.
class Instance {
 public:
  Instance() = default;
  Instance(std::vector<std::string> node_names, std::vector<NodeId> terminals,
           std::vector<Edge> edges);

  struct NamedEdge {
    std::string u;
    std::string v;
    Rational tu;
    Rational tv;
  };
  static Instance from_names(std::vector<std::string> node_names,
                             const std::vector<std::string>& terminals,
                             const std::vector<NamedEdge>& edges);

  int num_nodes() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& name(NodeId v) const { return names_[v]; }
  const std::vector<std::string>& names() const { return names_; }
  // Throws Error(kInvalidInstance) for unknown names.
  NodeId id(std::string_view name) const;

  // Sorted ascending.
  const std::vector<NodeId>& terminals() const { return terminals_; }
  bool is_terminal(NodeId v) const { return is_terminal_[v]; }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const EdgeId> incident(NodeId v) const { return incident_[v]; }

  NodeId other_end(EdgeId e, NodeId v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }
  const Rational& threshold_at(EdgeId e, NodeId v) const {
    return edges_[e].u == v ? edges_[e].tu : edges_[e].tv;
  }

  // True when no edge joins two terminals.
  bool terminals_independent() const;
  bool all_thresholds_equal(const Rational& value) const;

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, NodeId> index_;
  std::vector<NodeId> terminals_;
  std::vector<bool> is_terminal_;
  std::vector<Edge> edges_;
  std::vector<std::vector<EdgeId>> incident_;
};

// Node values, zero by default.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(int num_nodes) : values_(num_nodes) {}

  int size() const { return static_cast<int>(values_.size()); }
  const Rational& operator[](NodeId v) const { return values_[v]; }
  Rational& operator[](NodeId v) { return values_[v]; }
  const std::vector<Rational>& values() const { return values_; }

  // Sets a_v = max(a_v, level); returns the increase.
  Rational raise_to(NodeId v, const Rational& level);

  Rational total() const;

  Assignment& operator+=(const Assignment& other);
  friend Assignment operator+(Assignment a, const Assignment& b) {
    return a += b;
  }
  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<Rational> values_;
};

// Instance slope; std::nullopt stands for +infinity.
class Slope {
 public:
  Slope() = default;
  explicit Slope(Rational value) : value_(value) {}
  static Slope infinite() {
    Slope s;
    s.value_.reset();
    return s;
  }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }
  double to_double() const;
  std::string str() const;

 private:
  std::optional<Rational> value_ = Rational(0);
};

struct DerivedCosts {
  std::vector<Rational> q;  // per node; zero off the terminal set
  std::vector<Rational> c;  // per node; zero off the terminal set
  Rational total_q;
  Rational total_c;
  Slope theta;
  int delta = 0;  // max number of terminal neighbours of a node
};

// Throws Error(kIsolatedTerminal) if a terminal has no incident edge.
DerivedCosts derive_costs(const Instance& inst);

bool is_activated(const Instance& inst, const Assignment& a, EdgeId e);
std::vector<EdgeId> activated_edges(const Instance& inst, const Assignment& a);

// covered[v] is true for terminals touched by an activated edge.
std::vector<bool> covered_terminals(const Instance& inst,
                                    const Assignment& a);

struct CoverCheck {
  bool covered = false;
  std::vector<NodeId> uncovered;
};
CoverCheck covers(const Instance& inst, const Assignment& a);

// Each terminal raised to q and then every terminal's minimum-value edge
// activated. Feasible with value <= Q + C.
Assignment cheapest_edge_cover(const Instance& inst, const DerivedCosts& costs);

}  // namespace aec

#endif  // AEC_INSTANCE_H_

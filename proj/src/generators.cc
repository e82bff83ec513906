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

#include "aec/generators.h"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <utility>

#include "aec/error.h"

namespace aec {

namespace {

constexpr int kRetryBudget = 1000;

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (int i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// k distinct values from [0, n), ascending.
std::vector<int> sample(Rng& rng, int n, int k) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - i)));
    std::swap(pool[i], pool[j]);
  }
  pool.resize(k);
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Uniform in [ceil(hi / 2), hi], at least lo.
int upper_half(Rng& rng, int lo, int hi) {
  return rng.between(std::max(lo, (hi + 1) / 2), std::max(lo, hi));
}

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

bool feasible(const Instance& inst) {
  for (NodeId r : inst.terminals()) {
    if (inst.incident(r).empty()) return false;
  }
  return true;
}

template <typename Draw>
Instance retry(const char* what, Draw draw) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    std::optional<Instance> inst = draw();
    if (inst && feasible(*inst)) return std::move(*inst);
  }
  throw Error(ErrorCode::kGenerationFailed,
              std::string(what) + ": no feasible draw within retry budget");
}

// Random graph on n nodes with r terminals and m distinct node pairs; the
// thresholds of each pair come from `thresholds`.
template <typename Thresholds>
Instance random_graph(Rng& rng, int max_nodes, int max_terminals,
                      int max_edges, const char* what,
                      Thresholds thresholds) {
  if (max_nodes < 2 || max_terminals < 1 || max_edges < 1) {
    throw Error(ErrorCode::kDomainError, std::string(what) + ": sizes");
  }
  return retry(what, [&]() -> std::optional<Instance> {
    int n = upper_half(rng, 2, max_nodes);
    int r = upper_half(rng, 1, std::min(max_terminals, n));
    std::vector<std::pair<int, int>> pairs = all_pairs(n);
    int m = upper_half(rng, 1, std::min<int>(max_edges, pairs.size()));
    std::vector<NodeId> terminals = sample(rng, n, r);
    std::vector<Edge> edges;
    for (int i : sample(rng, static_cast<int>(pairs.size()), m)) {
      auto [tu, tv] = thresholds();
      edges.push_back({pairs[i].first, pairs[i].second, tu, tv});
    }
    return Instance(numbered("v", n), std::move(terminals), std::move(edges));
  });
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::kDomainError, "Rng::below(0)");
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % n + 1) % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x > limit);
  return x % n;
}

Instance from_facility_location(
    const std::vector<Rational>& opening,
    const std::vector<std::vector<std::optional<Rational>>>& service) {
  const int clients = static_cast<int>(service.size());
  const int facilities = static_cast<int>(opening.size());
  std::vector<std::string> names = numbered("c", clients);
  for (std::string& f : numbered("f", facilities)) names.push_back(std::move(f));
  std::vector<NodeId> terminals(clients);
  std::iota(terminals.begin(), terminals.end(), 0);
  for (const Rational& w : opening) {
    if (w < Rational(0)) {
      throw Error(ErrorCode::kDomainError, "negative opening cost");
    }
  }
  std::vector<Edge> edges;
  for (int c = 0; c < clients; ++c) {
    if (static_cast<int>(service[c].size()) != facilities) {
      throw Error(ErrorCode::kInvalidInstance, "service matrix shape");
    }
    for (int f = 0; f < facilities; ++f) {
      if (!service[c][f]) continue;
      if (*service[c][f] < Rational(0)) {
        throw Error(ErrorCode::kDomainError, "negative service cost");
      }
      edges.push_back({c, clients + f, *service[c][f], opening[f]});
    }
  }
  return Instance(std::move(names), std::move(terminals), std::move(edges));
}

Instance from_theta_setcover(int num_elements,
                             const std::vector<std::vector<int>>& sets,
                             const std::vector<Rational>& weights,
                             const Rational& theta) {
  if (theta <= Rational(0)) {
    throw Error(ErrorCode::kDomainError, "theta must be positive");
  }
  if (weights.size() != sets.size()) {
    throw Error(ErrorCode::kInvalidInstance, "one weight per set");
  }
  std::vector<std::string> names = numbered("e", num_elements);
  for (std::string& s : numbered("s", static_cast<int>(sets.size()))) {
    names.push_back(std::move(s));
  }
  std::vector<NodeId> terminals(num_elements);
  std::iota(terminals.begin(), terminals.end(), 0);
  std::vector<Edge> edges;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (int e : sets[s]) {
      if (e < 0 || e >= num_elements) {
        throw Error(ErrorCode::kInvalidInstance, "element out of range");
      }
      edges.push_back({e, num_elements + static_cast<int>(s),
                       weights[s] / theta, weights[s]});
    }
  }
  return Instance(std::move(names), std::move(terminals), std::move(edges));
}

Instance from_installation(std::vector<std::string> nodes,
                           const std::vector<NodeId>& terminals,
                           std::vector<std::vector<Rational>> levels,
                           const std::vector<InstallationPair>& pairs) {
  ActivationSpec spec;
  spec.nodes = std::move(nodes);
  spec.levels = std::move(levels);
  for (const InstallationPair& p : pairs) {
    spec.pairs.push_back(
        {p.u, p.v, InstallationRecord{p.demand, p.gamma_uv, p.gamma_vu}});
  }
  return levels_reduction(spec, terminals);
}

Instance random_minpower(int max_nodes, int max_terminals, int max_edges,
                         std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(rng, max_nodes, max_terminals, max_edges,
                      "random_minpower", [&] {
                        Rational t(rng.between(1, 6));
                        return std::pair{t, t};
                      });
}

Instance random_general(int max_nodes, int max_terminals, int max_edges,
                        int levels, std::uint64_t seed) {
  static const std::array<Rational, 6> kPool = {
      Rational(1), Rational(2), Rational(1, 2),
      Rational(3), Rational(3, 2), Rational(5)};
  if (levels < 1 || levels > static_cast<int>(kPool.size())) {
    throw Error(ErrorCode::kDomainError, "random_general: level pool size");
  }
  Rng rng(seed);
  return random_graph(rng, max_nodes, max_terminals, max_edges,
                      "random_general", [&] {
                        return std::pair{kPool[rng.below(levels)],
                                         kPool[rng.below(levels)]};
                      });
}

Instance random_unit(int max_nodes, int max_terminals, int max_edges,
                     std::uint64_t seed) {
  Rng rng(seed);
  return random_graph(rng, max_nodes, max_terminals, max_edges, "random_unit",
                      [] { return std::pair{Rational(1), Rational(1)}; });
}

Instance random_theta_setcover(int max_elements, int max_sets,
                               const Rational& theta, std::uint64_t seed) {
  if (max_elements < 1 || max_sets < 1) {
    throw Error(ErrorCode::kDomainError, "random_theta_setcover: sizes");
  }
  Rng rng(seed);
  return retry("random_theta_setcover", [&]() -> std::optional<Instance> {
    int n = upper_half(rng, 1, max_elements);
    int k = upper_half(rng, 1, max_sets);
    std::vector<std::vector<int>> sets(k);
    std::vector<Rational> weights;
    for (int s = 0; s < k; ++s) {
      for (int e = 0; e < n; ++e) {
        if (rng.chance(40)) sets[s].push_back(e);
      }
      weights.emplace_back(rng.between(1, 5));
    }
    return from_theta_setcover(n, sets, weights, theta);
  });
}

Instance random_installation(int max_nodes, int max_terminals, int max_pairs,
                             int levels, std::uint64_t seed) {
  static const std::array<int, 4> kHeights = {5, 10, 15, 20};
  static const std::array<int, 5> kDemands = {10, 15, 20, 25, 30};
  static const std::array<Rational, 3> kGammas = {Rational(1), Rational(2),
                                                  Rational(1, 2)};
  if (max_nodes < 2 || max_terminals < 1 || max_pairs < 1 || levels < 1 ||
      levels > static_cast<int>(kHeights.size())) {
    throw Error(ErrorCode::kDomainError, "random_installation: sizes");
  }
  Rng rng(seed);
  return retry("random_installation", [&]() -> std::optional<Instance> {
    int n = upper_half(rng, 2, max_nodes);
    int r = upper_half(rng, 1, std::min(max_terminals, n));
    std::vector<std::pair<int, int>> all = all_pairs(n);
    int m = upper_half(rng, 1, std::min<int>(max_pairs, all.size()));
    std::vector<std::vector<Rational>> node_levels;
    for (int v = 0; v < n; ++v) {
      std::vector<Rational> lv;
      for (int i : sample(rng, kHeights.size(), rng.between(1, levels))) {
        lv.emplace_back(kHeights[i]);
      }
      node_levels.push_back(std::move(lv));
    }
    std::vector<NodeId> terminals = sample(rng, n, r);
    std::vector<InstallationPair> pairs;
    for (int i : sample(rng, static_cast<int>(all.size()), m)) {
      pairs.push_back({all[i].first, all[i].second,
                       Rational(kDemands[rng.below(kDemands.size())]),
                       kGammas[rng.below(kGammas.size())],
                       kGammas[rng.below(kGammas.size())]});
    }
    return from_installation(numbered("v", n), terminals,
                             std::move(node_levels), pairs);
  });
}

Instance random_uniform(int max_clients, int max_facilities,
                        std::uint64_t seed) {
  if (max_clients < 1 || max_facilities < 1) {
    throw Error(ErrorCode::kDomainError, "random_uniform: sizes");
  }
  Rng rng(seed);
  return retry("random_uniform", [&]() -> std::optional<Instance> {
    int clients = upper_half(rng, 1, max_clients);
    int facilities = upper_half(rng, 1, max_facilities);
    std::vector<Rational> opening;
    std::vector<Rational> service;
    for (int f = 0; f < facilities; ++f) {
      opening.emplace_back(rng.between(0, 6));
      service.emplace_back(rng.between(1, 4));
    }
    std::vector<std::vector<std::optional<Rational>>> d(clients);
    for (int c = 0; c < clients; ++c) {
      for (int f = 0; f < facilities; ++f) {
        d[c].push_back(rng.chance(50) ? std::optional(service[f])
                                      : std::nullopt);
      }
    }
    return from_facility_location(opening, d);
  });
}

Instance random_facility_location(int max_clients, int max_facilities,
                                  const Rational& theta, std::uint64_t seed) {
  if (max_clients < 1 || max_facilities < 1) {
    throw Error(ErrorCode::kDomainError, "random_facility_location: sizes");
  }
  if (theta <= Rational(0)) {
    throw Error(ErrorCode::kDomainError, "theta must be positive");
  }
  Rng rng(seed);
  return retry("random_facility_location", [&]() -> std::optional<Instance> {
    int clients = upper_half(rng, 1, max_clients);
    int facilities = upper_half(rng, 1, max_facilities);
    std::vector<std::vector<std::optional<Rational>>> d(clients);
    std::vector<std::optional<Rational>> min_d(facilities);
    for (int c = 0; c < clients; ++c) {
      for (int f = 0; f < facilities; ++f) {
        if (!rng.chance(60)) {
          d[c].push_back(std::nullopt);
          continue;
        }
        Rational dist(rng.between(1, 6));
        d[c].push_back(dist);
        if (!min_d[f] || dist < *min_d[f]) min_d[f] = dist;
      }
    }
    // w_v uniform on {0, 1/4, ..., theta * min d} in quarter steps.
    std::vector<Rational> opening;
    for (int f = 0; f < facilities; ++f) {
      Rational cap = min_d[f] ? theta * *min_d[f] : Rational(0);
      Rational quarters = cap * Rational(4);
      std::int64_t steps = quarters.num() / quarters.den();
      opening.push_back(
          Rational(static_cast<std::int64_t>(
                       rng.below(static_cast<std::uint64_t>(steps) + 1)),
                   4));
    }
    return from_facility_location(opening, d);
  });
}

TightExample tight73() {
  constexpr int kUpper = 12;
  constexpr int kLeaves = 4;
  constexpr int kBottom = 13;
  // Node ids: upper 0..11, bottom 12..24, leaves 25.. (upper i, leaf j at
  // 25 + 4i + j).
  std::vector<std::string> names = numbered("u", kUpper);
  for (std::string& b : numbered("b", kBottom)) names.push_back(std::move(b));
  const NodeId first_leaf = kUpper + kBottom;
  for (int i = 0; i < kUpper; ++i) {
    for (int j = 0; j < kLeaves; ++j) {
      names.push_back("r" + std::to_string(i) + "_" + std::to_string(j));
    }
  }
  auto leaf = [&](int i, int j) { return first_leaf + kLeaves * i + j; };
  std::vector<NodeId> terminals;
  std::vector<Edge> edges;
  const Rational one(1);
  for (int i = 0; i < kUpper; ++i) {
    for (int j = 0; j < kLeaves; ++j) {
      terminals.push_back(leaf(i, j));
      edges.push_back({i, leaf(i, j), one, one});
    }
  }
  // (degree, leaf index) per bottom group: 3 of degree 4 on leaf 0,
  // 4 of degree 3 on leaf 1, 6 of degree 2 on leaf 2.
  const std::array<std::array<int, 3>, 3> groups = {
      {{3, 4, 0}, {4, 3, 1}, {6, 2, 2}}};
  NodeId b = kUpper;
  std::vector<NodeId> order;
  for (const auto& [count, degree, j] : groups) {
    for (int g = 0; g < count; ++g, ++b) {
      for (int k = 0; k < degree; ++k) {
        edges.push_back({b, leaf(g * degree + k, j), one, one});
      }
      order.push_back(b);
    }
  }
  return {Instance(std::move(names), std::move(terminals), std::move(edges)),
          std::move(order)};
}

namespace {

constexpr std::array<std::pair<Family, const char*>, 8> kFamilyNames = {{
    {Family::kFacilityLocation, "facility-location"},
    {Family::kThetaSetCover, "theta-setcover"},
    {Family::kMinPower, "min-power"},
    {Family::kInstallation, "installation"},
    {Family::kUnitRandom, "unit-random"},
    {Family::kUniformRandom, "uniform-random"},
    {Family::kGeneralRandom, "general-random"},
    {Family::kTight73, "tight73"},
}};

}  // namespace

std::string family_name(Family family) {
  for (const auto& [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  for (const auto& [f, n] : kFamilyNames) {
    if (name == n) return f;
  }
  throw Error(ErrorCode::kParseError,
              "unknown family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
  static const std::vector<Family> families = [] {
    std::vector<Family> out;
    for (const auto& entry : kFamilyNames) out.push_back(entry.first);
    return out;
  }();
  return families;
}

GeneratedInstance generate(const FamilySpec& spec) {
  // Bipartite families split the node budget between the two sides.
  const int side = std::max(1, spec.nodes - spec.terminals);
  switch (spec.family) {
    case Family::kFacilityLocation:
      return {random_facility_location(spec.terminals, side, spec.theta,
                                       spec.seed),
              {}};
    case Family::kThetaSetCover:
      return {random_theta_setcover(spec.terminals, side, spec.theta,
                                    spec.seed),
              {}};
    case Family::kMinPower:
      return {random_minpower(spec.nodes, spec.terminals, spec.edges,
                              spec.seed),
              {}};
    case Family::kInstallation:
      return {random_installation(spec.nodes, spec.terminals, spec.edges,
                                  spec.levels, spec.seed),
              {}};
    case Family::kUnitRandom:
      return {random_unit(spec.nodes, spec.terminals, spec.edges, spec.seed),
              {}};
    case Family::kUniformRandom:
      return {random_uniform(spec.terminals, side, spec.seed), {}};
    case Family::kGeneralRandom:
      return {random_general(spec.nodes, spec.terminals, spec.edges,
                             spec.levels, spec.seed),
              {}};
    case Family::kTight73: {
      TightExample t = tight73();
      return {std::move(t.instance), std::move(t.adversarial_order)};
    }
  }
  throw Error(ErrorCode::kInvalidInstance, "unknown family");
}

}  // namespace aec

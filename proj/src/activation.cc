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

#include "aec/activation.h"

#include <utility>

#include "aec/error.h"

namespace aec {
namespace {

void validate(const ActivationSpec& spec) {
  const int n = static_cast<int>(spec.nodes.size());
  if (static_cast<int>(spec.levels.size()) != n) {
    throw Error(ErrorCode::kInvalidInstance,
                "level lists do not match the node list");
  }
  for (int v = 0; v < n; ++v) {
    const auto& levels = spec.levels[v];
    if (levels.empty()) {
      throw Error(ErrorCode::kEmptyLevels,
                  "node '" + spec.nodes[v] + "' has no levels");
    }
    for (std::size_t i = 0; i < levels.size(); ++i) {
      if (levels[i] < 0 || (i > 0 && !(levels[i - 1] < levels[i]))) {
        throw Error(ErrorCode::kInvalidInstance,
                    "levels of '" + spec.nodes[v] +
                        "' must be non-negative and strictly ascending");
      }
    }
  }
  for (const ActivationPair& pair : spec.pairs) {
    if (pair.u < 0 || pair.u >= n || pair.v < 0 || pair.v >= n ||
        pair.u == pair.v) {
      throw Error(ErrorCode::kInvalidInstance, "bad activation pair");
    }
    const auto* table = std::get_if<ActivationTable>(&pair.predicate);
    if (table == nullptr) {
      const auto& rec = std::get<InstallationRecord>(pair.predicate);
      if (rec.demand < 0 || !(rec.gamma_uv > 0) || !(rec.gamma_vu > 0)) {
        throw Error(ErrorCode::kInvalidInstance,
                    "installation record needs demand >= 0 and gamma > 0");
      }
      continue;
    }
    const std::size_t rows = spec.levels[pair.u].size();
    const std::size_t cols = spec.levels[pair.v].size();
    if (table->active.size() != rows) {
      throw Error(ErrorCode::kInvalidInstance, "activation table shape");
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (table->active[i].size() != cols) {
        throw Error(ErrorCode::kInvalidInstance, "activation table shape");
      }
      for (std::size_t j = 0; j < cols; ++j) {
        if (!table->active[i][j]) continue;
        if ((i + 1 < rows && !table->active[i + 1][j]) ||
            (j + 1 < cols && !table->active[i][j + 1])) {
          throw Error(ErrorCode::kNonMonotone,
                      "activation table for '" + spec.nodes[pair.u] + "'-'" +
                          spec.nodes[pair.v] + "' is not monotone");
        }
      }
    }
  }
}

}  // namespace

bool pair_active(const ActivationSpec& spec, const ActivationPair& pair,
                 int level_u, int level_v) {
  if (const auto* table = std::get_if<ActivationTable>(&pair.predicate)) {
    return table->active[level_u][level_v];
  }
  const auto& rec = std::get<InstallationRecord>(pair.predicate);
  return rec.gamma_uv * spec.levels[pair.u][level_u] +
             rec.gamma_vu * spec.levels[pair.v][level_v] >=
         rec.demand;
}

Instance levels_reduction(const ActivationSpec& spec,
                          const std::vector<NodeId>& terminals) {
  validate(spec);
  // The domain of v is {0} and L_v; -1 marks an unlisted 0, which activates
  // no table pair.
  auto domain = [&](NodeId v) {
    std::vector<std::pair<Rational, int>> d;
    if (!spec.levels[v].front().is_zero()) d.emplace_back(Rational(0), -1);
    for (int i = 0; i < static_cast<int>(spec.levels[v].size()); ++i) {
      d.emplace_back(spec.levels[v][i], i);
    }
    return d;
  };
  std::vector<Edge> edges;
  for (const ActivationPair& pair : spec.pairs) {
    const auto du = domain(pair.u);
    const auto dv = domain(pair.v);
    auto active = [&](int i, int j) {
      if (const auto* t = std::get_if<ActivationTable>(&pair.predicate)) {
        return du[i].second >= 0 && dv[j].second >= 0 &&
               t->active[du[i].second][dv[j].second];
      }
      const auto& rec = std::get<InstallationRecord>(pair.predicate);
      return rec.gamma_uv * du[i].first + rec.gamma_vu * dv[j].first >=
             rec.demand;
    };
    for (int i = 0; i < static_cast<int>(du.size()); ++i) {
      for (int j = 0; j < static_cast<int>(dv.size()); ++j) {
        if (!active(i, j)) continue;
        // Monotone predicate: minimal iff both one-step-down neighbours fail.
        if (i > 0 && active(i - 1, j)) continue;
        if (j > 0 && active(i, j - 1)) continue;
        edges.push_back({pair.u, pair.v, du[i].first, dv[j].first});
      }
    }
  }
  return Instance(spec.nodes, terminals, std::move(edges));
}

}  // namespace aec

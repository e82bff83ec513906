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

// Reductions from named covering problems, seeded random instance families
// and the tight example of the average-price greedy.

#ifndef AEC_GENERATORS_H_
#define AEC_GENERATORS_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "aec/activation.h"
#include "aec/instance.h"

namespace aec {

// Platform-independent draws on top of std::mt19937_64 (the standard
// distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  // Uniform in [lo, hi].
  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
  bool chance(int percent) { return below(100) < static_cast<std::uint64_t>(percent); }

 private:
  std::mt19937_64 engine_;
};

// Clients c0.., then facilities f0... An edge per finite service cost with
// threshold d at the client and the opening cost at the facility.
Instance from_facility_location(
    const std::vector<Rational>& opening,
    const std::vector<std::vector<std::optional<Rational>>>& service);

// Elements e0.., then sets s0... Picking set v costs w_v plus w_v / theta
// per covered element.
Instance from_theta_setcover(int num_elements,
                             const std::vector<std::vector<int>>& sets,
                             const std::vector<Rational>& weights,
                             const Rational& theta);

struct InstallationPair {
  NodeId u = 0;
  NodeId v = 0;
  Rational demand;
  Rational gamma_uv;
  Rational gamma_vu;
};
Instance from_installation(std::vector<std::string> nodes,
                           const std::vector<NodeId>& terminals,
                           std::vector<std::vector<Rational>> levels,
                           const std::vector<InstallationPair>& pairs);

// Upper bounds on sizes; actual sizes are drawn per seed from the upper half
// of each range. Throws Error(kGenerationFailed) when no feasible draw is
// found.
Instance random_minpower(int max_nodes, int max_terminals, int max_edges,
                         std::uint64_t seed);
Instance random_general(int max_nodes, int max_terminals, int max_edges,
                        int levels, std::uint64_t seed);
Instance random_unit(int max_nodes, int max_terminals, int max_edges,
                     std::uint64_t seed);
Instance random_theta_setcover(int max_elements, int max_sets,
                               const Rational& theta, std::uint64_t seed);
Instance random_installation(int max_nodes, int max_terminals, int max_pairs,
                             int levels, std::uint64_t seed);
Instance random_uniform(int max_clients, int max_facilities,
                        std::uint64_t seed);
Instance random_facility_location(int max_clients, int max_facilities,
                                  const Rational& theta, std::uint64_t seed);

struct TightExample {
  Instance instance;
  std::vector<NodeId> adversarial_order;  // the 13 bottom facilities
};
// 48 unit-threshold terminals in 12 optimal 4-stars plus 13 bottom nodes of
// degrees 4,4,4,3,3,3,3,2,2,2,2,2,2. Optimum 60; the average-price greedy
// that prefers bottom nodes on ties pays 73.
TightExample tight73();

enum class Family {
  kFacilityLocation,
  kThetaSetCover,
  kMinPower,
  kInstallation,
  kUnitRandom,
  kUniformRandom,
  kGeneralRandom,
  kTight73,
};

std::string family_name(Family family);
// Throws Error(kParseError) for unknown names.
Family parse_family(std::string_view name);
const std::vector<Family>& all_families();

struct FamilySpec {
  Family family = Family::kMinPower;
  std::uint64_t seed = 0;
  int nodes = 10;      // max |V| (clients + facilities for bipartite ones)
  int terminals = 6;   // max |R|
  int edges = 16;      // max |E| (pairs for installation)
  int levels = 3;      // threshold pool size
  Rational theta = Rational(2);
};

struct GeneratedInstance {
  Instance instance;
  std::vector<NodeId> adversarial_order;  // tight73 only
};

GeneratedInstance generate(const FamilySpec& spec);

}  // namespace aec

#endif  // AEC_GENERATORS_H_

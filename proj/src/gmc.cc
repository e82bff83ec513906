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

#include "aec/gmc.h"

namespace aec {

const char* greedy_stop_name(GreedyStop stop) {
  switch (stop) {
    case GreedyStop::kReachedTarget:
      return "reached-target";
    case GreedyStop::kNoAugmentation:
      return "no-augmentation";
    case GreedyStop::kDensityAboveOne:
      return "density-above-one";
    case GreedyStop::kZeroGain:
      return "zero-gain";
  }
  return "unknown";
}

double theorem2_bound(double nu0, double nu_star, double tau_star) {
  if (!(tau_star > 0)) {
    throw Error(ErrorCode::kDomainError, "tau* must be positive");
  }
  const double spread = (nu0 - nu_star) / tau_star;
  if (spread <= 1) return 1.0;
  return 1.0 + tau_star / (tau_star + nu_star) * std::log(spread);
}

}  // namespace aec

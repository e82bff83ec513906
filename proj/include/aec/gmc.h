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

// Greedy framework for Generalized Min-Covering: minimize nu(A) + tau(A)
// where the potential nu is decreasing and the payment tau is sub-additive.
//
// Starting from the problem's initial state the greedy repeatedly asks the
// problem for a minimum-density augmentation B (density = tau(B) divided by
// the drop of nu it causes) and accepts it while the density is at most 1.
// A minimum-density B with density <= 1 always meets the Density Condition,
// so the unknown optimum never has to be evaluated.

#ifndef AEC_GMC_H_
#define AEC_GMC_H_

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "aec/error.h"
#include "aec/rational.h"

namespace aec {

template <typename Augmentation>
struct GmcProposal {
  Augmentation augmentation;
  Rational payment;          // tau(B)
  Rational potential_after;  // nu(A + B)
};

template <typename State, typename Augmentation>
class GmcProblem {
 public:
  using StateType = State;
  using AugmentationType = Augmentation;

  virtual ~GmcProblem() = default;

  virtual State initial_state() const = 0;
  virtual Rational potential(const State& state) const = 0;
  // nu*, the potential of an optimal solution (a lower bound for nu).
  virtual Rational target() const = 0;
  // A minimum-density augmentation, or nullopt when none decreases nu.
  virtual std::optional<GmcProposal<Augmentation>> min_density_augmentation(
      const State& state) const = 0;
  virtual void apply(State& state, const Augmentation& augmentation) const = 0;
};

struct GreedyStep {
  Rational payment;
  Rational potential_before;
  Rational potential_after;
};

enum class GreedyStop {
  kReachedTarget,
  kNoAugmentation,
  kDensityAboveOne,
  kZeroGain,
};

const char* greedy_stop_name(GreedyStop stop);

struct GreedyTrace {
  Rational initial_potential;
  std::vector<GreedyStep> steps;
  GreedyStop stop = GreedyStop::kReachedTarget;

  Rational total_payment() const {
    Rational sum;
    for (const GreedyStep& step : steps) sum += step.payment;
    return sum;
  }
  Rational final_potential() const {
    return steps.empty() ? initial_potential : steps.back().potential_after;
  }
};

// Throws Error(kOracleViolation) if a proposal would increase the potential
// or if `verify` is set and the reported potential disagrees with the state
// after applying the augmentation.
template <typename Problem>
std::pair<typename Problem::StateType, GreedyTrace> gmc_greedy(
    const Problem& problem, bool verify = true) {
  auto state = problem.initial_state();
  GreedyTrace trace;
  trace.initial_potential = problem.potential(state);
  const Rational target = problem.target();
  Rational current = trace.initial_potential;
  while (true) {
    if (current <= target) {
      trace.stop = GreedyStop::kReachedTarget;
      break;
    }
    auto proposal = problem.min_density_augmentation(state);
    if (!proposal) {
      trace.stop = GreedyStop::kNoAugmentation;
      break;
    }
    if (proposal->potential_after > current) {
      throw Error(ErrorCode::kOracleViolation,
                  "augmentation increases the potential");
    }
    const Rational gain = current - proposal->potential_after;
    if (gain.is_zero()) {
      trace.stop = GreedyStop::kZeroGain;
      break;
    }
    if (proposal->payment > gain) {
      trace.stop = GreedyStop::kDensityAboveOne;
      break;
    }
    problem.apply(state, proposal->augmentation);
    if (verify && problem.potential(state) != proposal->potential_after) {
      throw Error(ErrorCode::kOracleViolation,
                  "reported potential differs from the applied state");
    }
    trace.steps.push_back({proposal->payment, current,
                           proposal->potential_after});
    current = proposal->potential_after;
  }
  return {std::move(state), std::move(trace)};
}

// Approximation ratio guaranteed for a greedy run with initial potential
// nu0 against an optimum with potential nu_star and payment tau_star:
// 1 + tau*/(tau* + nu*) * ln((nu0 - nu*) / tau*), or 1 when the log
// argument is at most 1. Throws Error(kDomainError) unless tau_star > 0.
double theorem2_bound(double nu0, double nu_star, double tau_star);

}  // namespace aec

#endif  // AEC_GMC_H_

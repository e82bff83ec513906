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

#ifndef AEC_SOLVE_REPORT_H_
#define AEC_SOLVE_REPORT_H_

#include <optional>
#include <string>

#include "aec/gmc.h"
#include "aec/instance.h"
#include "aec/rational.h"

namespace aec {

// Audit data of the unit-a2 solver: the winning iteration k and the sizes
// of the star-root set and the subsolver cover it combined.
struct UnitAudit {
  int winning_k = 0;
  int star_roots = 0;
  int subsolver_sets = 0;
};

struct SolveReport {
  std::string algorithm;
  Assignment assignment;
  Rational value;
  Slope theta;
  int delta = 0;
  double claimed_bound = 1.0;
  std::string bound_name;
  std::optional<Rational> exact_value;
  std::optional<double> empirical_ratio;
  std::optional<GreedyTrace> trace;
  std::optional<UnitAudit> unit_audit;
};

// Fills exact_value and empirical_ratio (1 when both values are zero).
void attach_exact(SolveReport& report, const Rational& exact_value);

// True when the empirical ratio, if present, is within claimed_bound up to
// floating-point slack.
bool within_claimed_bound(const SolveReport& report);

}  // namespace aec

#endif  // AEC_SOLVE_REPORT_H_

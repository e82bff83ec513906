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

#include "aec/solve_report.h"

#include <limits>

namespace aec {

void attach_exact(SolveReport& report, const Rational& exact_value) {
  report.exact_value = exact_value;
  if (exact_value.is_zero()) {
    report.empirical_ratio =
        report.value.is_zero() ? 1.0 : std::numeric_limits<double>::infinity();
  } else {
    report.empirical_ratio = (report.value / exact_value).to_double();
  }
}

bool within_claimed_bound(const SolveReport& report) {
  if (!report.empirical_ratio) return true;
  return *report.empirical_ratio <= report.claimed_bound + 1e-9;
}

}  // namespace aec

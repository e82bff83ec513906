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

// Closed-form approximation bounds and the constants they are built from.
//
//   omega(theta)     unique real root of x + 1 = ln(theta / x)
//   omega_bar(theta) max_k (H_k - 1) / (1 + k / theta)
//   k_theta          smallest k with H_k >= 2 + (theta - 1) / (k + 1); the
//                    maximum in omega_bar is attained there
//
// For large theta both 1 + omega and 1 + omega_bar approach
// ln(theta) - ln(ln(theta)), but only slowly.

#ifndef AEC_BOUNDS_H_
#define AEC_BOUNDS_H_

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "aec/instance.h"
#include "aec/rational.h"

namespace aec {

using BigRational = boost::multiprecision::cpp_rational;

// Bisection on (0, theta]. Throws Error(kDomainError) for theta <= 0.
double omega(double theta);

// Requires a finite theta > 0.
int k_theta(double theta);
int k_theta_exact(const BigRational& theta);

// max over 1 <= k <= cap (cap = k_theta when absent). theta may be +inf
// only together with a cap.
double omega_bar(double theta, std::optional<int> cap = std::nullopt);
BigRational omega_bar_exact(const BigRational& theta,
                            std::optional<int> cap = std::nullopt);

BigRational harmonic(int k);
double harmonic_double(int k);

// Ratio of the greedy set-cover algorithm on n elements with optimum tau,
// for any M > 0: 1 + omega_bar(n M / tau) (1 + 1/M).
double setcover_greedy_bound(double n, double tau, double m);

struct BoundRow {
  double theta = 0;
  double one_plus_omega = 0;
  double one_plus_omega_bar = 0;
  std::optional<double> ln_minus_lnln;  // absent when theta <= 1
  double one_plus_ln = 0;
};

struct BoundTable {
  std::vector<BoundRow> rows;
};

BoundRow bound_row(double theta);
// theta in {1, 2, 3, 4, 5, 10, 100, 1000, 10000, 10^6}.
BoundTable table1();
// Four decimals rounded up, one line per bound function.
void print_bound_table(std::ostream& os, const BoundTable& table);

struct AlphaTable {
  std::array<Rational, 8> alpha;  // alpha[1..7]; alpha[0] unused
  Rational sigma;                 // alpha_1 + ... + alpha_5
  Rational rho;
};
// Best known k-set-cover ratios for k <= 7 and the resulting unit ratio.
const AlphaTable& alpha_table();

// (H_k - 7/6) / (k + 1) maximized over 2 <= k <= max_k.
struct Algorithm1Constant {
  int argmax = 0;
  BigRational value;
};
Algorithm1Constant algorithm1_constant(int max_k = 100);

inline const Rational kLocallyUniformUnitRatio(73, 60);
inline const Rational kAlgorithm1Ratio(427, 360);  // 1 + 67/360
inline const Rational kUnitRatio(1555, 1347);

struct ClaimedBound {
  double value = 0;
  std::string name;
};

// min(1 + omega(theta), 1 + ln(delta + 1)), and 1 + ln(delta) when the
// terminals are independent.
ClaimedBound general_bound(const Slope& theta, int delta,
                           bool terminals_independent);

// 1 + omega_bar(theta) truncated at k <= delta.
ClaimedBound locally_uniform_bound(const Slope& theta, int delta);

}  // namespace aec

#endif  // AEC_BOUNDS_H_

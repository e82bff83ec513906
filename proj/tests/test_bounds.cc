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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "aec/bounds.h"
#include "aec/error.h"
#include "aec/generators.h"

namespace aec {
namespace {

TEST_CASE("omega solves its defining equation") {
  for (int i = 0; i < 50; ++i) {
    const double theta = std::pow(10.0, -2 + 8.0 * i / 49);
    const double w = omega(theta);
    CAPTURE(theta);
    CHECK(std::abs(w + 1 - std::log(theta / w)) < 1e-12);
  }
}

TEST_CASE("omega spot values and domain") {
  CHECK(std::abs(1 + omega(1) - 1.2785) < 5e-5);
  CHECK(1 + omega(1) < 1.2785 + 5e-5);
  CHECK(std::abs(1 + omega(100) - 3.6360) < 1e-4);
  CHECK_THROWS_AS(omega(0), Error);
  CHECK_THROWS_AS(omega(-1), Error);
}

TEST_CASE("k_theta and omega_bar") {
  CHECK(k_theta(1) == 4);
  CHECK(k_theta_exact(1) == 4);
  CHECK(omega_bar_exact(1) == BigRational(13, 60));
  CHECK(1 + omega_bar(1) == doctest::Approx(73.0 / 60));
  CHECK(std::abs(1 + omega_bar(10) - 1.9645) < 5e-5);
  CHECK(omega_bar(1, 2) == doctest::Approx((1.5 - 1) / 3));
  CHECK(omega_bar(INFINITY, 3) == doctest::Approx(11.0 / 6 - 1));
  for (double theta : {1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 100.0, 1000.0, 1e4,
                       1e6}) {
    CHECK(omega_bar(theta) < omega(theta));
  }
}

// g(k) = (H_k - 1) / (1 + k / theta).
double g(int k, double theta) {
  return (harmonic_double(k) - 1) / (1 + k / theta);
}

TEST_CASE("the argmax of g is k_theta") {
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    const double theta =
        std::pow(10.0, -1 + 5.0 * static_cast<double>(rng.below(1000000)) / 1e6);
    int best = 1;
    for (int k = 2; k <= 100000; ++k) {
      if (g(k, theta) > g(best, theta)) best = k;
      if (k > best + 50) break;
    }
    CAPTURE(theta);
    CHECK(best == k_theta(theta));
    // g increases exactly while 2 - H_k + (theta - 1)/(k + 1) > 0.
    for (int k = 1; k < best + 5; ++k) {
      const double sign = 2 - harmonic_double(k) + (theta - 1) / (k + 1);
      const double diff = g(k + 1, theta) - g(k, theta);
      if (std::abs(sign) > 1e-9) CHECK((sign > 0) == (diff > 0));
    }
  }
}

TEST_CASE("harmonic numbers") {
  CHECK(harmonic(1) == BigRational(1));
  CHECK(harmonic(4) == BigRational(25, 12));
  CHECK(harmonic(5) == BigRational(137, 60));
  CHECK(harmonic_double(5) == doctest::Approx(137.0 / 60));
}

TEST_CASE("set-cover greedy bound") {
  const double b = setcover_greedy_bound(1000, 10, 10);
  CHECK(b == doctest::Approx(1 + omega_bar(1000) * 1.1));
  CHECK(setcover_greedy_bound(5, 5, 1) >= 1);
  double prev = 0;
  for (double m : {1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0}) {
    const double limit = 1 + omega_bar(100 * m / 10);
    const double val = setcover_greedy_bound(100, 10, m);
    CHECK(val >= limit);
    CHECK(val - limit == doctest::Approx(omega_bar(100 * m / 10) / m));
    CHECK(limit >= prev);
    prev = limit;
  }
  CHECK_THROWS_AS(setcover_greedy_bound(0, 1, 1), Error);
}

TEST_CASE("table rows") {
  BoundTable t = table1();
  REQUIRE(t.rows.size() == 10);
  CHECK_FALSE(t.rows[0].ln_minus_lnln.has_value());
  CHECK(std::abs(*t.rows[1].ln_minus_lnln - 1.0597) < 5e-5);
  CHECK(std::abs(t.rows[9].one_plus_omega - 11.4673) < 5e-5);
  CHECK(std::abs(t.rows[3].one_plus_ln - 2.6095) < 1e-4);
  std::ostringstream os;
  print_bound_table(os, t);
  CHECK(os.str().find("2.6095") != std::string::npos);
  CHECK(os.str().find("11.4673") != std::string::npos);
}

TEST_CASE("alpha table and derived constants") {
  const AlphaTable& a = alpha_table();
  CHECK(a.alpha[1] == Rational(1));
  CHECK(a.alpha[2] == Rational(1));
  CHECK(a.alpha[3] == Rational(4, 3));
  CHECK(a.alpha[4] == Rational(73, 48));
  CHECK(a.alpha[5] == Rational(26, 15));
  CHECK(a.alpha[6] == Rational(28, 15));
  CHECK(a.alpha[7] == Rational(212, 105));
  CHECK(a.sigma == Rational(1581, 240));
  CHECK(a.rho == Rational(1555, 1347));
  CHECK(Rational(1) + (a.alpha[6] - Rational(1)) /
                          (Rational(6) * a.alpha[6] - a.sigma + Rational(1)) ==
        Rational(1555, 1347));
  Algorithm1Constant c = algorithm1_constant(100);
  CHECK(c.argmax == 5);
  CHECK(c.value == BigRational(67, 360));
  CHECK(Rational(1) + Rational(67, 360) == kAlgorithm1Ratio);
}

TEST_CASE("claimed bounds") {
  ClaimedBound b = general_bound(Slope(Rational(1)), 3, false);
  CHECK(b.value == doctest::Approx(1 + omega(1)));
  ClaimedBound inf = general_bound(Slope::infinite(), 3, false);
  CHECK(inf.value == doctest::Approx(1 + std::log(4.0)));
  ClaimedBound indep = general_bound(Slope::infinite(), 3, true);
  CHECK(indep.value == doctest::Approx(1 + std::log(3.0)));
  ClaimedBound small = general_bound(Slope(Rational(100)), 1, true);
  CHECK(small.value == doctest::Approx(1.0));
  CHECK(general_bound(Slope(Rational(0)), 4, false).value == 1.0);
  CHECK(locally_uniform_bound(Slope(Rational(1)), 10).value ==
        doctest::Approx(73.0 / 60));
  CHECK(locally_uniform_bound(Slope(Rational(1)), 2).value ==
        doctest::Approx(1 + 0.5 / 3));
  CHECK(locally_uniform_bound(Slope::infinite(), 4).value ==
        doctest::Approx(25.0 / 12));
}

}  // namespace
}  // namespace aec

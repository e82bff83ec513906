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

#include "aec/bounds.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "aec/error.h"

namespace aec {

double omega(double theta) {
  if (!(theta > 0) || std::isinf(theta)) {
    throw Error(ErrorCode::kDomainError, "omega needs a finite theta > 0");
  }
  // h is strictly increasing, h(theta) = theta + 1 > 0 and h -> -inf at 0.
  const auto h = [theta](double x) { return x + 1 - std::log(theta / x); };
  double hi = theta;
  double lo = theta;
  while (h(lo) >= 0) lo /= 2;
  for (int iter = 0; iter < 2000; ++iter) {
    const double mid = lo + (hi - lo) / 2;
    if (mid <= lo || mid >= hi) break;
    if (h(mid) < 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::abs(h(lo)) <= std::abs(h(hi)) ? lo : hi;
}

int k_theta(double theta) {
  if (!(theta > 0) || std::isinf(theta)) {
    throw Error(ErrorCode::kDomainError, "k_theta needs a finite theta > 0");
  }
  long double h = 1;
  int k = 1;
  while (h < 2 + (static_cast<long double>(theta) - 1) / (k + 1)) {
    ++k;
    h += 1.0L / k;
  }
  return k;
}

int k_theta_exact(const BigRational& theta) {
  if (theta <= 0) {
    throw Error(ErrorCode::kDomainError, "k_theta needs theta > 0");
  }
  BigRational h = 1;
  int k = 1;
  while (h < 2 + (theta - 1) / (k + 1)) {
    ++k;
    h += BigRational(1, k);
  }
  return k;
}

BigRational harmonic(int k) {
  if (k < 1) throw Error(ErrorCode::kDomainError, "harmonic needs k >= 1");
  BigRational h = 0;
  for (int i = 1; i <= k; ++i) h += BigRational(1, i);
  return h;
}

double harmonic_double(int k) {
  long double h = 0;
  for (int i = 1; i <= k; ++i) h += 1.0L / i;
  return static_cast<double>(h);
}

double omega_bar(double theta, std::optional<int> cap) {
  if (!(theta > 0)) {
    throw Error(ErrorCode::kDomainError, "omega_bar needs theta > 0");
  }
  if (cap && *cap < 1) return 0.0;
  if (std::isinf(theta)) {
    if (!cap) {
      return std::numeric_limits<double>::infinity();
    }
    return harmonic_double(*cap) - 1;
  }
  int k = k_theta(theta);
  if (cap) k = std::min(k, *cap);
  return (harmonic_double(k) - 1) / (1 + k / theta);
}

BigRational omega_bar_exact(const BigRational& theta, std::optional<int> cap) {
  if (cap && *cap < 1) return 0;
  int k = k_theta_exact(theta);
  if (cap) k = std::min(k, *cap);
  return (harmonic(k) - 1) / (1 + k / theta);
}

double setcover_greedy_bound(double n, double tau, double m) {
  if (!(n > 0) || !(tau > 0) || !(m > 0)) {
    throw Error(ErrorCode::kDomainError,
                "set-cover bound needs n, tau, M > 0");
  }
  return 1 + omega_bar(n * m / tau) * (1 + 1 / m);
}

BoundRow bound_row(double theta) {
  BoundRow row;
  row.theta = theta;
  row.one_plus_omega = 1 + omega(theta);
  row.one_plus_omega_bar = 1 + omega_bar(theta);
  if (theta > 1) row.ln_minus_lnln = std::log(theta) - std::log(std::log(theta));
  row.one_plus_ln = 1 + std::log(theta + 1);
  return row;
}

BoundTable table1() {
  BoundTable table;
  for (const double theta : {1.0, 2.0, 3.0, 4.0, 5.0, 10.0, 100.0, 1000.0,
                             10000.0, 1000000.0}) {
    table.rows.push_back(bound_row(theta));
  }
  return table;
}

namespace {

std::string format_theta(double theta) {
  char buf[64];
  if (theta == std::floor(theta) && theta < 1e15) {
    std::snprintf(buf, sizeof(buf), "%.0f", theta);
  } else {
    std::snprintf(buf, sizeof(buf), "%g", theta);
  }
  return buf;
}

// Rounded up, so a printed entry is still an upper bound. The small offset
// keeps exact four-decimal values (1.58) from moving up a unit.
std::string format_value(double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", std::ceil(value * 1e4 - 1e-6) / 1e4);
  return buf;
}

void print_row(std::ostream& os, const std::string& label,
               const std::vector<std::string>& cells) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%-20s", label.c_str());
  os << buf;
  for (const std::string& cell : cells) {
    std::snprintf(buf, sizeof(buf), " %9s", cell.c_str());
    os << buf;
  }
  os << '\n';
}

}  // namespace

void print_bound_table(std::ostream& os, const BoundTable& table) {
  std::vector<std::string> thetas, omegas, omega_bars, lnlns, lns;
  for (const BoundRow& row : table.rows) {
    thetas.push_back(format_theta(row.theta));
    omegas.push_back(format_value(row.one_plus_omega));
    omega_bars.push_back(format_value(row.one_plus_omega_bar));
    lnlns.push_back(row.ln_minus_lnln ? format_value(*row.ln_minus_lnln)
                                      : std::string("-"));
    lns.push_back(format_value(row.one_plus_ln));
  }
  print_row(os, "theta", thetas);
  print_row(os, "1+omega(theta)", omegas);
  print_row(os, "1+omega_bar(theta)", omega_bars);
  print_row(os, "ln(t)-ln(ln(t))", lnlns);
  print_row(os, "1+ln(theta+1)", lns);
}

const AlphaTable& alpha_table() {
  static const AlphaTable table = [] {
    AlphaTable t;
    t.alpha = {Rational(0),      Rational(1),      Rational(1),
               Rational(4, 3),   Rational(73, 48), Rational(26, 15),
               Rational(28, 15), Rational(212, 105)};
    for (int k = 1; k <= 5; ++k) t.sigma += t.alpha[k];
    t.rho = (Rational(7) * t.alpha[6] - t.sigma) /
            (Rational(6) * t.alpha[6] - t.sigma + Rational(1));
    return t;
  }();
  return table;
}

Algorithm1Constant algorithm1_constant(int max_k) {
  Algorithm1Constant best;
  BigRational h = BigRational(3, 2);
  for (int k = 2; k <= max_k; ++k) {
    if (k > 2) h += BigRational(1, k);
    const BigRational g = (h - BigRational(7, 6)) / (k + 1);
    if (best.argmax == 0 || g > best.value) {
      best.argmax = k;
      best.value = g;
    }
  }
  return best;
}

ClaimedBound general_bound(const Slope& theta, int delta,
                           bool terminals_independent) {
  ClaimedBound best{1 + std::log(delta + 1.0), "1+ln(delta+1)"};
  if (terminals_independent) {
    const double independent = delta >= 1 ? 1 + std::log(double(delta)) : 1.0;
    if (independent < best.value) best = {independent, "1+ln(delta)"};
  }
  if (!theta.is_infinite()) {
    if (theta.value().is_zero()) {
      best = {1.0, "exact(theta=0)"};
    } else {
      const double by_slope = 1 + omega(theta.to_double());
      if (by_slope < best.value) best = {by_slope, "1+omega(theta)"};
    }
  }
  return best;
}

ClaimedBound locally_uniform_bound(const Slope& theta, int delta) {
  if (delta < 1 || (!theta.is_infinite() && theta.value().is_zero())) {
    return {1.0, "exact"};
  }
  return {1 + omega_bar(theta.to_double(), delta), "1+omega_bar(theta)"};
}

}  // namespace aec

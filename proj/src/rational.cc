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

#include "aec/rational.h"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace aec {
namespace {

__int128 abs128(__int128 x) { return x < 0 ? -x : x; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    const __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits64(__int128 x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

__int128 parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed rational: '" + std::string(whole) +
                                "'");
  }
  __int128 value = 0;
  for (const char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) {
      throw std::invalid_argument("malformed rational: '" +
                                  std::string(whole) + "'");
    }
    value = value * 10 + (ch - '0');
    if (value > std::numeric_limits<std::int64_t>::max()) {
      throw std::overflow_error("rational literal too large: '" +
                                std::string(whole) + "'");
    }
  }
  return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  *this = from_wide(num, den);
}

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits64(num) || !fits64(den)) {
    throw std::overflow_error("rational arithmetic overflow");
  }
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  __int128 num = 0;
  __int128 den = 1;
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    num = parse_digits(s.substr(0, slash), text);
    den = parse_digits(s.substr(slash + 1), text);
  } else if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) +
                                  "'");
    }
    num = int_part.empty() ? 0 : parse_digits(int_part, text);
    for (const char ch : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument("malformed rational: '" +
                                    std::string(text) + "'");
      }
      num = num * 10 + (ch - '0');
      den *= 10;
      if (!fits64(num) || !fits64(den)) {
        throw std::overflow_error("rational literal too long: '" +
                                  std::string(text) + "'");
      }
    }
  } else {
    num = parse_digits(s, text);
  }
  return from_wide(negative ? -num : num, den);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-__int128{num_}, den_); }

Rational& Rational::operator+=(const Rational& other) {
  if (den_ == other.den_) {
    return *this = from_wide(__int128{num_} + other.num_, den_);
  }
  return *this = from_wide(
             static_cast<__int128>(num_) * other.den_ +
                 static_cast<__int128>(other.num_) * den_,
             static_cast<__int128>(den_) * other.den_);
}

Rational& Rational::operator-=(const Rational& other) {
  return *this += -other;
}

Rational& Rational::operator*=(const Rational& other) {
  // Cross-reduce first so that products of already-reduced fractions stay
  // within range whenever the result does.
  const __int128 g1 = gcd128(num_, other.den_);
  const __int128 g2 = gcd128(other.num_, den_);
  const __int128 n1 = g1 > 1 ? num_ / g1 : num_;
  const __int128 d2 = g1 > 1 ? other.den_ / g1 : other.den_;
  const __int128 n2 = g2 > 1 ? other.num_ / g2 : other.num_;
  const __int128 d1 = g2 > 1 ? den_ / g2 : den_;
  return *this = from_wide(n1 * n2, d1 * d2);
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.num_ == 0) throw std::domain_error("rational division by zero");
  Rational inverse;
  inverse.num_ = other.den_;
  inverse.den_ = other.num_;
  if (inverse.den_ < 0) {
    inverse.num_ = -inverse.num_;
    inverse.den_ = -inverse.den_;
  }
  return *this *= inverse;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

}  // namespace aec

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

#ifndef AEC_RATIONAL_H_
#define AEC_RATIONAL_H_

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace aec {

// Exact rational with 64-bit numerator and denominator. Intermediate
// products use 128-bit integers; a result that does not fit back into 64
// bits throws std::overflow_error instead of silently wrapping.
//
// The value is always normalized: den() > 0 and gcd(num, den) == 1.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(std::int64_t value) : num_(value) {}  // NOLINT
  Rational(std::int64_t num, std::int64_t den);

  // Accepts "7", "-3/2" and decimal literals such as "1.25", which are
  // converted exactly (1.1 == 11/10). Exponent notation is rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  // "3/2", or "3" for integers.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

 private:
  static Rational from_wide(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

inline const Rational& max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}
inline const Rational& min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace aec

#endif  // AEC_RATIONAL_H_

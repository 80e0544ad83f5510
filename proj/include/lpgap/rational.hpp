// Copyright 2026 The lpgap Authors
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

#ifndef LPGAP_RATIONAL_HPP_
#define LPGAP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lpgap {

using BigInt = mpz_class;

// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1. Every
// constructor and arithmetic result is canonical, so two Rationals are equal
// iff their numerators and denominators are identical.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}                // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}               // NOLINT(google-explicit-constructor)
  Rational(long long v);                    // NOLINT(google-explicit-constructor)
  Rational(unsigned long v) : q_(v) {}      // NOLINT(google-explicit-constructor)
  Rational(unsigned long long v);           // NOLINT(google-explicit-constructor)
  Rational(const BigInt& v) : q_(v) {}      // NOLINT(google-explicit-constructor)

  // Throws ValidationError when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  // Accepts "p/q", "p", and decimal "a.b" forms with an optional sign.
  static Rational parse(std::string_view text);

  const BigInt& num() const { return q_.get_num(); }
  const BigInt& den() const { return q_.get_den(); }

  // "p/q", or "p" when the denominator is 1.
  std::string str() const;

  bool is_integer() const { return den() == 1; }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  BigInt floor() const;
  BigInt ceil() const;
  // x - floor(x), always in [0, 1).
  Rational frac() const;
  Rational abs() const;

  // Lossy; for display only.
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  // Throws std::domain_error on division by zero.
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { Rational r; r.q_ = -a.q_; return r; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  mpq_class q_;
};

// Canonical num/den. Throws ValidationError on a zero denominator.
Rational rat_normalize(const BigInt& num, const BigInt& den);

// Exact three-way comparison.
std::strong_ordering rat_compare(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace lpgap

#endif  // LPGAP_RATIONAL_HPP_

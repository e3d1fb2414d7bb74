/*
Copyright (c) 2026 The spinwit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace spinwit {

/// Exact rational number backed by GMP. Always stored in lowest terms with a
/// positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value);  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);

  /// Parses "p/q" or "p" (decimal integers of any length).
  static Rational parse(const std::string& text);

  std::string numerator_string() const;
  std::string denominator_string() const;
  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const;
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return a.value_ < b.value_; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.to_string();
  }

  const mpq_class& raw() const { return value_; }
  static Rational from_raw(mpq_class value);

 private:
  mpq_class value_{0};
};

/// n! as an exact integer-valued rational.
Rational factorial(unsigned n);

/// Coefficients c_0..c_{n-1} (constant term first) of the Lagrange cardinal
/// polynomial l_target(x) = prod_{k != target} (x - nodes[k]) / (nodes[target] - nodes[k]).
/// Throws DomainError on duplicate nodes or an out-of-range target.
std::vector<Rational> vandermonde_solve(std::span<const Rational> nodes, std::size_t target);

/// Evaluates sum_n coeffs[n] x^n exactly.
Rational evaluate_polynomial(std::span<const Rational> coeffs, const Rational& x);

}  // namespace spinwit

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

#include "spinwit/rational.hpp"

#include <cmath>

#include "spinwit/error.hpp"

namespace spinwit {

Rational::Rational(long value) : value_(value) {}

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DomainError("rational with zero denominator");
  value_ = mpq_class(mpz_class(numerator), mpz_class(denominator));
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  mpq_class q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw DomainError("not a rational number: '" + text + "'");
  }
  if (q.get_den() == 0) throw DomainError("rational with zero denominator: '" + text + "'");
  q.canonicalize();
  return from_raw(std::move(q));
}

Rational Rational::from_raw(mpq_class value) {
  Rational r;
  r.value_ = std::move(value);
  r.value_.canonicalize();
  return r;
}

std::string Rational::numerator_string() const { return value_.get_num().get_str(); }
std::string Rational::denominator_string() const { return value_.get_den().get_str(); }
std::string Rational::to_string() const { return value_.get_str(); }

double Rational::to_double() const {
  // mpq_get_d truncates; go through mpf for round-to-nearest-ish accuracy on
  // large numerators and denominators.
  mpf_class f(value_, 256);
  return f.get_d();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}
Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}
Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}
Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("rational division by zero");
  value_ /= rhs.value_;
  return *this;
}
Rational Rational::operator-() const { return from_raw(-value_); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational::from_raw(mpq_class(f));
}

std::vector<Rational> vandermonde_solve(std::span<const Rational> nodes, std::size_t target) {
  const std::size_t n = nodes.size();
  if (target >= n) throw DomainError("vandermonde_solve: target index out of range");
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t l = k + 1; l < n; ++l) {
      if (nodes[k] == nodes[l]) {
        throw DomainError("vandermonde_solve: duplicate node " + nodes[k].to_string() +
                          " (singular Vandermonde system)");
      }
    }
  }
  // Multiply out prod_{k != target} (x - nodes[k]) in the monomial basis.
  std::vector<Rational> coeffs{Rational(1)};
  Rational denom(1);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == target) continue;
    std::vector<Rational> next(coeffs.size() + 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      next[i + 1] += coeffs[i];
      next[i] -= nodes[k] * coeffs[i];
    }
    coeffs = std::move(next);
    denom *= nodes[target] - nodes[k];
  }
  for (auto& c : coeffs) c /= denom;
  return coeffs;
}

Rational evaluate_polynomial(std::span<const Rational> coeffs, const Rational& x) {
  Rational acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace spinwit

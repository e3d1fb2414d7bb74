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

#include "spinwit/wigner.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/error.hpp"

namespace spinwit {

bool triangle_admissible(int a, int b, int c) {
  if (a < 0 || b < 0 || c < 0) return false;
  if ((a + b + c) % 2 != 0) return false;
  return c >= std::abs(a - b) && c <= a + b;
}

bool six_j_admissible(const SixJInput& j) {
  const auto& t = j.twice;
  return triangle_admissible(t[0], t[1], t[2]) && triangle_admissible(t[0], t[4], t[5]) &&
         triangle_admissible(t[3], t[1], t[5]) && triangle_admissible(t[3], t[4], t[2]);
}

namespace {

// Squared triangle coefficient Delta(abc)^2 for an admissible triad.
Rational delta_squared(int a, int b, int c) {
  return factorial(static_cast<unsigned>((a + b - c) / 2)) *
         factorial(static_cast<unsigned>((a - b + c) / 2)) *
         factorial(static_cast<unsigned>((-a + b + c) / 2)) /
         factorial(static_cast<unsigned>((a + b + c) / 2 + 1));
}

}  // namespace

double SixJExact::to_double() const {
  if (sign == 0) return 0.0;
  return sign * std::sqrt(square.to_double());
}

SixJExact six_j_exact(const SixJInput& j) {
  if (!six_j_admissible(j)) return {};
  const auto& t = j.twice;
  // Triad perimeters and the three column-pair sums, as plain integers.
  const int a1 = (t[0] + t[1] + t[2]) / 2;
  const int a2 = (t[0] + t[4] + t[5]) / 2;
  const int a3 = (t[3] + t[1] + t[5]) / 2;
  const int a4 = (t[3] + t[4] + t[2]) / 2;
  const int b1 = (t[0] + t[1] + t[3] + t[4]) / 2;
  const int b2 = (t[1] + t[2] + t[4] + t[5]) / 2;
  const int b3 = (t[2] + t[0] + t[5] + t[3]) / 2;

  const int t_min = std::max({a1, a2, a3, a4});
  const int t_max = std::min({b1, b2, b3});
  Rational sum;
  for (int k = t_min; k <= t_max; ++k) {
    Rational term = factorial(static_cast<unsigned>(k + 1));
    for (int a : {a1, a2, a3, a4}) term /= factorial(static_cast<unsigned>(k - a));
    for (int b : {b1, b2, b3}) term /= factorial(static_cast<unsigned>(b - k));
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  if (sum.is_zero()) return {};
  const Rational deltas = delta_squared(t[0], t[1], t[2]) * delta_squared(t[0], t[4], t[5]) *
                          delta_squared(t[3], t[1], t[5]) * delta_squared(t[3], t[4], t[2]);
  return {sum.sign(), deltas * sum * sum};
}

double six_j(const SixJInput& j) { return six_j_exact(j).to_double(); }

ThetaMatrix::ThetaMatrix(SpinLabel s, std::vector<double> entries)
    : spin_(s), entries_(std::move(entries)) {
  if (entries_.size() != s.dim() * s.dim()) throw DomainError("ThetaMatrix: wrong entry count");
}

ThetaMatrix theta_matrix(SpinLabel s) {
  const int ts = s.twice_spin();
  const std::size_t n = s.dim();
  std::vector<double> entries(n * n);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t k = f; k < n; ++k) {
      const SixJInput in{{ts, ts, 2 * static_cast<int>(f), ts, ts, 2 * static_cast<int>(k)}};
      const double value =
          std::sqrt(static_cast<double>((2 * f + 1) * (2 * k + 1))) * six_j(in);
      entries[f * n + k] = value;
      entries[k * n + f] = value;
    }
  }
  return ThetaMatrix(s, std::move(entries));
}

std::vector<double> alpha_prime(const ThetaMatrix& theta, std::span<const double> alpha) {
  const std::size_t n = theta.size();
  if (alpha.size() != n) {
    throw DomainError("alpha_prime: vector has " + std::to_string(alpha.size()) +
                      " entries, Theta is " + std::to_string(n) + "x" + std::to_string(n));
  }
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t f = 0; f < n; ++f) out[k] += theta(k, f) * alpha[f];
  return out;
}

std::vector<double> alpha_prime(const ThetaMatrix& theta, const AlphaVector& alpha) {
  return alpha_prime(theta, std::span<const double>(alpha.values()));
}

}  // namespace spinwit

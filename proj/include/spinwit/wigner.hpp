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

#include <array>
#include <span>
#include <vector>

#include "spinwit/alpha_vector.hpp"
#include "spinwit/rational.hpp"
#include "spinwit/spin_ops.hpp"

namespace spinwit {

/// Arguments of {j1 j2 j3; j4 j5 j6}, each given as 2j >= 0.
struct SixJInput {
  std::array<int, 6> twice{};
};

/// (a, b, c) given as twice-values: integer perimeter and triangle inequality.
bool triangle_admissible(int twice_a, int twice_b, int twice_c);

/// All four triads {j1 j2 j3}, {j1 j5 j6}, {j4 j2 j6}, {j4 j5 j3} admissible.
bool six_j_admissible(const SixJInput& j);

/// Exact value sign * sqrt(square).
struct SixJExact {
  int sign = 0;
  Rational square;
  double to_double() const;
};

/// Racah single-sum formula with exact factorials. Inadmissible input gives 0.
SixJExact six_j_exact(const SixJInput& j);

/// six_j_exact rounded to double.
double six_j(const SixJInput& j);

/// Theta_{FK} = sqrt((2F+1)(2K+1)) {s s F; s s K}; maps channel weights of a
/// state onto the K-channel weights of its partial transpose.
class ThetaMatrix {
 public:
  ThetaMatrix(SpinLabel s, std::vector<double> entries);

  SpinLabel spin() const { return spin_; }
  std::size_t size() const { return spin_.dim(); }
  double operator()(std::size_t f, std::size_t k) const { return entries_[f * size() + k]; }
  const std::vector<double>& entries() const { return entries_; }

 private:
  SpinLabel spin_;
  std::vector<double> entries_;
};

ThetaMatrix theta_matrix(SpinLabel s);

/// alpha' = Theta alpha. Entries of alpha' may be negative, so the result is a
/// plain coefficient list. Throws DomainError on a size mismatch.
std::vector<double> alpha_prime(const ThetaMatrix& theta, std::span<const double> alpha);
std::vector<double> alpha_prime(const ThetaMatrix& theta, const AlphaVector& alpha);

}  // namespace spinwit

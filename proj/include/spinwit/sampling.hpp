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

#include <random>
#include <vector>

#include "spinwit/matrix.hpp"

namespace spinwit {

/// Uniform point on the probability simplex (normalized exponential variates).
inline std::vector<double> simplex_weights(std::size_t n, std::mt19937_64& rng) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) total += (x = expo(rng));
  for (auto& x : w) x /= total;
  return w;
}

/// Normalized complex Gaussian vector.
inline ComplexVector random_unit_vector(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss;
  ComplexVector v(n);
  for (auto& z : v) z = Complex(gauss(rng), gauss(rng));
  const double len = norm(v);
  for (auto& z : v) z /= len;
  return v;
}

}  // namespace spinwit

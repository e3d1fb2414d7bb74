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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "spinwit/error.hpp"

namespace spinwit::oracle {

namespace {

ComplexMatrix hermitian_sqrt(const ComplexMatrix& m) {
  const auto eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double root = std::sqrt(std::max(0.0, eig.values[k]));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        out(r, c) += root * eig.vectors(r, k) * std::conj(eig.vectors(c, k));
  }
  return out;
}

}  // namespace

double spin_flip_concurrence(const DensityMatrix& rho) {
  if (rho.dim() != 4) throw DomainError("spin_flip_concurrence: two-qubit state required");
  ComplexMatrix sigma_y(2, 2);
  sigma_y(0, 1) = Complex(0.0, -1.0);
  sigma_y(1, 0) = Complex(0.0, 1.0);
  const auto yy = kron(sigma_y, sigma_y);
  ComplexMatrix conj_rho = rho.matrix();
  for (auto& z : conj_rho.entries()) z = std::conj(z);
  const auto flipped = yy * conj_rho * yy;
  const auto root = hermitian_sqrt(rho.matrix());
  auto product = root * flipped * root;
  // Clean up rounding asymmetry before the Hermitian solver sees it.
  product = (product + product.adjoint()) * Complex(0.5);
  auto values = hermitian_eigenvalues(product);
  std::vector<double> roots;
  for (double v : values) roots.push_back(std::sqrt(std::max(0.0, v)));
  std::sort(roots.begin(), roots.end(), std::greater<>());
  return std::max(0.0, roots[0] - roots[1] - roots[2] - roots[3]);
}

std::vector<double> theta_by_partial_transpose(SpinLabel s) {
  const std::size_t n = s.dim();
  const auto p = channel_projectors(s);
  const auto pk = k_projectors(s);
  std::vector<double> theta(n * n);
  for (std::size_t f = 0; f < n; ++f) {
    const auto transposed = partial_transpose(p[f], n, n);
    for (std::size_t k = 0; k < n; ++k) {
      theta[k * n + f] = trace_of_product(transposed, pk[k]).real() /
                         std::sqrt(static_cast<double>((2 * f + 1) * (2 * k + 1)));
    }
  }
  return theta;
}

ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = gauss(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = Complex(gauss(rng), gauss(rng));
      m(c, r) = std::conj(m(r, c));
    }
  }
  return m;
}

}  // namespace spinwit::oracle

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

#include "spinwit/density.hpp"

#include <cmath>
#include <string>

#include "spinwit/error.hpp"

namespace spinwit {

namespace {

void check_shape_and_trace(const ComplexMatrix& m, const std::vector<std::size_t>& local_dims) {
  if (!m.is_square() || m.rows() == 0) throw DomainError("density matrix: not a non-empty square matrix");
  if (local_dims.empty()) throw DomainError("density matrix: no local dimensions given");
  std::size_t product = 1;
  for (auto d : local_dims) {
    if (d == 0) throw DomainError("density matrix: local dimension 0");
    product *= d;
  }
  if (product != m.rows()) {
    throw DomainError("density matrix: dimension mismatch, local dims multiply to " +
                      std::to_string(product) + " but matrix is " + std::to_string(m.rows()));
  }
  if (!is_hermitian(m, DensityMatrix::kTolerance)) {
    throw DomainError("density matrix: not Hermitian within 1e-9");
  }
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > DensityMatrix::kTolerance) {
    throw DomainError("density matrix: trace " + std::to_string(tr.real()) + " is not 1 within 1e-9");
  }
}

}  // namespace

DensityMatrix DensityMatrix::create(ComplexMatrix matrix, std::vector<std::size_t> local_dims) {
  check_shape_and_trace(matrix, local_dims);
  const auto values = hermitian_eigenvalues(matrix);
  if (values.front() < -kTolerance) {
    throw DomainError("density matrix: negative eigenvalue " + std::to_string(values.front()) +
                      " below -1e-9");
  }
  return DensityMatrix(std::move(matrix), std::move(local_dims));
}

DensityMatrix DensityMatrix::from_construction(ComplexMatrix matrix, std::vector<std::size_t> local_dims) {
  check_shape_and_trace(matrix, local_dims);
  return DensityMatrix(std::move(matrix), std::move(local_dims));
}

DensityMatrix DensityMatrix::from_pure(std::span<const Complex> psi, std::vector<std::size_t> local_dims) {
  const double n = norm(psi);
  if (n == 0.0) throw DomainError("density matrix: zero state vector");
  ComplexVector unit(psi.begin(), psi.end());
  for (auto& z : unit) z /= n;
  return from_construction(outer(unit, unit), std::move(local_dims));
}

double DensityMatrix::expectation(const ComplexMatrix& op) const {
  return trace_of_product(matrix_, op).real();
}

}  // namespace spinwit

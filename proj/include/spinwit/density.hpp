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

#include <cstddef>
#include <vector>

#include "spinwit/matrix.hpp"

namespace spinwit {

/// A validated state on a tensor product of local spaces.
///
/// Invariants: Hermitian within 1e-9, unit trace within 1e-9, smallest
/// eigenvalue >= -1e-9, and the product of local_dims equals the dimension.
class DensityMatrix {
 public:
  static constexpr double kTolerance = 1e-9;

  /// Checks every invariant, including positivity via a full diagonalization.
  /// The diagnostic names the first constraint that failed.
  static DensityMatrix create(ComplexMatrix matrix, std::vector<std::size_t> local_dims);

  /// For states that are valid by construction (mixtures of projectors,
  /// normalized pure states, ...). Checks shape, Hermiticity and trace, but
  /// skips the eigenvalue check.
  static DensityMatrix from_construction(ComplexMatrix matrix, std::vector<std::size_t> local_dims);

  static DensityMatrix from_pure(std::span<const Complex> psi, std::vector<std::size_t> local_dims);

  std::size_t dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& local_dims() const { return local_dims_; }
  std::size_t sites() const { return local_dims_.size(); }

  /// Tr(rho * op), real part (op is expected to be Hermitian).
  double expectation(const ComplexMatrix& op) const;

 private:
  DensityMatrix(ComplexMatrix matrix, std::vector<std::size_t> local_dims)
      : matrix_(std::move(matrix)), local_dims_(std::move(local_dims)) {}

  ComplexMatrix matrix_;
  std::vector<std::size_t> local_dims_;
};

}  // namespace spinwit

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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace spinwit {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// Dense row-major complex matrix.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const double> values);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  Complex trace() const;
  /// Largest absolute entry.
  double max_abs() const;
  double frobenius_norm() const;

  ComplexMatrix& operator+=(const ComplexMatrix& rhs);
  ComplexMatrix& operator-=(const ComplexMatrix& rhs);
  ComplexMatrix& operator*=(Complex scale);

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  friend ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

/// max_{ij} |a_ij - b_ij|; throws DomainError on a shape mismatch.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
bool is_hermitian(const ComplexMatrix& m, double tol);
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Tr(a b) without forming the product.
Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b);

/// Transposes the indices of the second factor of a (dim_a * dim_b)-square
/// matrix: <mu alpha| M^T2 |nu beta> = <mu beta| M |nu alpha>.
ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b);

/// Multipartite form: transposes the indices of every site with transposed[k]
/// set. Site 0 is the slowest index.
ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<std::size_t>& local_dims,
                                const std::vector<bool>& transposed);

ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra);
/// <a|b>, conjugate-linear in the first argument.
Complex inner(std::span<const Complex> a, std::span<const Complex> b);
double norm(std::span<const Complex> v);

struct EigenSystem {
  /// Ascending.
  std::vector<double> values;
  /// Column k is the eigenvector for values[k].
  ComplexMatrix vectors;
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
/// Converges when the off-diagonal Frobenius norm drops below 1e-13 * ||m||_F;
/// throws ConvergenceError after 100 sweeps, DomainError on non-Hermitian input.
EigenSystem hermitian_eigen(const ComplexMatrix& m);

/// Eigenvalues only (same algorithm).
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Orthogonal projector onto the span of the eigenvectors whose eigenvalue lies
/// within `tol` of `value`.
ComplexMatrix spectral_projector(const EigenSystem& eig, double value, double tol);

}  // namespace spinwit

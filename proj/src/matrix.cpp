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

#include "spinwit/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spinwit/error.hpp"

namespace spinwit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw DomainError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                      std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
  ComplexMatrix m(values.size(), values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw DomainError("trace of a non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DomainError(std::string(what) + ": shape mismatch " + std::to_string(a.rows()) + "x" +
                      std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                      std::to_string(b.cols()));
  }
}

}  // namespace

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix addition");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& rhs) {
  require_same_shape(*this, rhs, "matrix subtraction");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& z : data_) z *= scale;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: inner dimension mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

ComplexVector operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
  ComplexVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t i = 0; i < ea.size(); ++i) m = std::max(m, std::abs(ea[i] - eb[i]));
  return m;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = r; c < m.cols(); ++c)
      if (std::abs(m(r, c) - std::conj(m(c, r))) > tol) return false;
  return true;
}

ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b - b * a; }

Complex trace_of_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw DomainError("trace_of_product: dimension mismatch");
  }
  Complex t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) t += a(i, k) * b(k, i);
  return t;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      if (aij == Complex(0.0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

ComplexVector kron(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(x * y);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b) {
  const std::size_t n = dim_a * dim_b;
  if (dim_a == 0 || dim_b == 0 || m.rows() != n || m.cols() != n) {
    throw DomainError("partial_transpose: matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " but subsystem dims give " + std::to_string(n));
  }
  ComplexMatrix out(n, n);
  for (std::size_t mu = 0; mu < dim_a; ++mu)
    for (std::size_t al = 0; al < dim_b; ++al)
      for (std::size_t nu = 0; nu < dim_a; ++nu)
        for (std::size_t be = 0; be < dim_b; ++be)
          out(mu * dim_b + al, nu * dim_b + be) = m(mu * dim_b + be, nu * dim_b + al);
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& m, const std::vector<std::size_t>& local_dims,
                                const std::vector<bool>& transposed) {
  if (local_dims.size() != transposed.size()) {
    throw DomainError("partial_transpose: site mask length does not match local dims");
  }
  std::size_t n = 1;
  for (auto d : local_dims) n *= d;
  if (m.rows() != n || m.cols() != n) {
    throw DomainError("partial_transpose: matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + " but local dims give " + std::to_string(n));
  }
  std::vector<std::size_t> strides(local_dims.size(), 1);
  for (std::size_t k = local_dims.size(); k-- > 1;) strides[k - 1] = strides[k] * local_dims[k];
  ComplexMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t src_r = r;
      std::size_t src_c = c;
      for (std::size_t k = 0; k < local_dims.size(); ++k) {
        if (!transposed[k]) continue;
        const std::size_t dr = (r / strides[k]) % local_dims[k];
        const std::size_t dc = (c / strides[k]) % local_dims[k];
        src_r = src_r - dr * strides[k] + dc * strides[k];
        src_c = src_c - dc * strides[k] + dr * strides[k];
      }
      out(r, c) = m(src_r, src_c);
    }
  }
  return out;
}

ComplexMatrix outer(std::span<const Complex> ket, std::span<const Complex> bra) {
  ComplexMatrix out(ket.size(), bra.size());
  for (std::size_t i = 0; i < ket.size(); ++i)
    for (std::size_t j = 0; j < bra.size(); ++j) out(i, j) = ket[i] * std::conj(bra[j]);
  return out;
}

Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.size() != b.size()) throw DomainError("inner product: length mismatch");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kRelativeOffTolerance = 1e-13;

double off_diagonal_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) s += std::norm(a(r, c));
  return std::sqrt(s);
}

// One unitary rotation in the (p, q) plane that zeroes a(p, q). The phase of
// a(p, q) is absorbed into column q first so the remaining 2x2 problem is real.
void rotate(ComplexMatrix& a, ComplexMatrix* v, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;  // e^{i phi}
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * r);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const Complex conj_phase = std::conj(phase);
  const std::size_t n = a.rows();

  // A <- A U with U_pp = c, U_pq = s, U_qp = -s e^{-i phi}, U_qq = c e^{-i phi}.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * conj_phase * akq;
    a(k, q) = s * akp + c * conj_phase * akq;
  }
  // A <- U^dagger A.
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;

  if (v != nullptr) {
    for (std::size_t k = 0; k < n; ++k) {
      const Complex vkp = (*v)(k, p);
      const Complex vkq = (*v)(k, q);
      (*v)(k, p) = c * vkp - s * conj_phase * vkq;
      (*v)(k, q) = s * vkp + c * conj_phase * vkq;
    }
  }
}

EigenSystem jacobi(const ComplexMatrix& m, bool want_vectors) {
  if (!m.is_square()) throw DomainError("hermitian_eigen: matrix is not square");
  const double scale = std::max(1.0, m.max_abs());
  if (!is_hermitian(m, 1e-9 * scale)) throw DomainError("hermitian_eigen: matrix is not Hermitian");

  const std::size_t n = m.rows();
  ComplexMatrix a = m;
  // Symmetrize so the rotation formulas see an exactly Hermitian input.
  for (std::size_t r = 0; r < n; ++r) {
    a(r, r) = a(r, r).real();
    for (std::size_t c = r + 1; c < n; ++c) {
      const Complex avg = 0.5 * (a(r, c) + std::conj(a(c, r)));
      a(r, c) = avg;
      a(c, r) = std::conj(avg);
    }
  }
  ComplexMatrix vectors = want_vectors ? ComplexMatrix::identity(n) : ComplexMatrix();
  const double target = kRelativeOffTolerance * m.frobenius_norm();

  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (sweep == kMaxSweeps) {
      throw ConvergenceError("hermitian_eigen: no convergence after " + std::to_string(kMaxSweeps) +
                             " sweeps (off-diagonal norm " + std::to_string(off) + ", target " +
                             std::to_string(target) + ", dim " + std::to_string(n) + ")");
    }
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, want_vectors ? &vectors : nullptr, p, q);
    ++sweep;
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  EigenSystem out;
  out.values.reserve(n);
  for (auto i : order) out.values.push_back(a(i, i).real());
  if (want_vectors) {
    out.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = vectors(r, order[k]);
  }
  return out;
}

}  // namespace

EigenSystem hermitian_eigen(const ComplexMatrix& m) { return jacobi(m, true); }

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) { return jacobi(m, false).values; }

ComplexMatrix spectral_projector(const EigenSystem& eig, double value, double tol) {
  const std::size_t n = eig.vectors.rows();
  ComplexMatrix p(n, n);
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k] - value) > tol) continue;
    for (std::size_t r = 0; r < n; ++r) {
      const Complex vr = eig.vectors(r, k);
      for (std::size_t c = 0; c < n; ++c) p(r, c) += vr * std::conj(eig.vectors(c, k));
    }
  }
  return p;
}

}  // namespace spinwit

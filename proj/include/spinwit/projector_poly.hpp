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

#include <vector>

#include "spinwit/matrix.hpp"
#include "spinwit/rational.hpp"
#include "spinwit/spin_ops.hpp"

namespace spinwit {

/// Polynomial in D = s_i . s_j with exact coefficients, constant term first.
/// Always holds exactly 2s + 1 coefficients (trailing zeros kept).
struct RationalPoly {
  int twice_spin = 1;
  std::vector<Rational> coeffs;

  Rational evaluate(const Rational& x) const { return evaluate_polynomial(coeffs, x); }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.twice_spin == b.twice_spin && a.coeffs == b.coeffs;
  }
};

/// Eigenvalues of D on each total-spin channel.
struct ChannelSpectrum {
  int twice_spin = 1;
  /// lambdas[F] = (F(F+1) - 2s(s+1)) / 2, strictly increasing.
  std::vector<Rational> lambdas;
};

ChannelSpectrum lambda_values(SpinLabel s);

/// P_F as a polynomial in D (Lagrange interpolation on the channel spectrum).
RationalPoly projector_coeffs(SpinLabel s, int channel);

/// S = (-1)^{2s} sum_F (-1)^F P_F as a polynomial in D.
RationalPoly swap_coeffs(SpinLabel s);

/// The singlet projector expanded from prod_{k=1}^{2s} [1 - 2(D + s(s+1)) / (k(k+1))].
/// Independent of the interpolation route used by projector_coeffs.
RationalPoly singlet_coeffs(SpinLabel s);

/// sum_n c_n D^n as an N^2 x N^2 matrix (Horner). Throws DomainError when the
/// polynomial does not carry 2s + 1 coefficients for this spin.
ComplexMatrix eval_poly_operator(const RationalPoly& p, SpinLabel s);

}  // namespace spinwit

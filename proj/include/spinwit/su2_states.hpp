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

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "spinwit/alpha_vector.hpp"
#include "spinwit/density.hpp"
#include "spinwit/spin_ops.hpp"
#include "spinwit/wigner.hpp"

namespace spinwit {

AlphaVector alpha_from_density(const DensityMatrix& rho, SpinLabel s);
DensityMatrix density_from_alpha(const AlphaVector& alpha);

/// (2s+1)^{-1} sum_K alpha'_K (2K+1)^{-1/2} P'_K over the K-channel projectors.
/// With alpha' = Theta alpha this reproduces the partial transpose of the
/// state described by alpha.
ComplexMatrix operator_from_k_weights(SpinLabel s, std::span<const double> k_weights);

/// sum_F Tr(rho P_F) / (2F+1) P_F.
DensityMatrix twirl(const DensityMatrix& rho, SpinLabel s);

struct NegativityResult {
  enum class Method { kFormula, kBrute };

  double value = 0.0;
  /// kFormula: max(0, .) terms for K = 0 .. 2s-1 (already divided by 2s+1).
  /// kBrute: magnitudes of the negative eigenvalues of the partial transpose.
  std::vector<double> per_channel;
  Method method = Method::kFormula;
};

/// (2s+1)^{-1} max(0, -sqrt(2K+1) (Theta alpha)_K) for every K = 0 .. 2s,
/// including the top channel that the negativity sum leaves out.
std::vector<double> negativity_channel_terms(const AlphaVector& alpha);

/// Negativity of the invariant state from its channel weights (K < 2s terms).
NegativityResult negativity_formula(const AlphaVector& alpha);

/// Sum of |negative eigenvalues| of rho^{T2} for a bipartite rho on dim_a x dim_b.
NegativityResult negativity_brute(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b);

/// Same, transposing the sites flagged in `transposed` (multipartite cut).
NegativityResult negativity_brute(const DensityMatrix& rho, const std::vector<bool>& transposed);

/// Spin-1 expectation values used by the closed-form negativities.
struct SpinOneMoments {
  double dot = 0.0;         // <D>
  double dot_squared = 0.0; // <D^2>
  double singlet = 0.0;     // <P_0>
  double swap = 0.0;        // <S>
};

SpinOneMoments spin1_moments(const AlphaVector& alpha);
SpinOneMoments spin1_moments(const DensityMatrix& rho);

struct SpinOneNegativity {
  /// 1/3 max(0, 1 - <D> - <D^2>) + 1/2 max(0, <D^2> - 2)
  NegativityResult from_dot_moments;
  /// 1/2 max(0, 3<P> - 1) + 1/3 max(0, -<S>)
  NegativityResult from_singlet_and_swap;
};

/// Both spin-1 closed forms. Throws DomainError unless s = 1.
SpinOneNegativity closed_form_negativity_spin1(const AlphaVector& alpha);
SpinOneNegativity closed_form_negativity_spin1(const DensityMatrix& rho, SpinLabel s);
SpinOneNegativity closed_form_negativity_spin1(const SpinOneMoments& m);

/// p rho_- + (1-p) rho_+ with rho_pm = (1 pm S) / (N(N pm 1)); <S> = 1 - 2p.
DensityMatrix werner_state(SpinLabel s, double p);

/// w P'/(2s+1) + (1-w) (1 - P'/(2s+1)) / (4s(s+1)).
DensityMatrix isotropic_state(SpinLabel s, double w);

/// Seeded random channel weights: uniform on the simplex of channel
/// populations Tr(rho P_F).
AlphaVector random_alpha(SpinLabel s, std::mt19937_64& rng);

}  // namespace spinwit

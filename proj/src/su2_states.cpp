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

#include "spinwit/su2_states.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinwit/error.hpp"
#include "spinwit/sampling.hpp"

namespace spinwit {

AlphaVector AlphaVector::create(SpinLabel s, std::vector<double> alpha, double tolerance) {
  if (alpha.size() != s.dim()) {
    throw DomainError("alpha vector: expected " + std::to_string(s.dim()) + " entries for spin " +
                      s.to_string() + ", got " + std::to_string(alpha.size()));
  }
  double trace = 0.0;
  for (std::size_t f = 0; f < alpha.size(); ++f) {
    if (!std::isfinite(alpha[f])) throw DomainError("alpha vector: non-finite entry");
    if (alpha[f] < -tolerance) {
      throw DomainError("alpha vector: negative entry alpha_" + std::to_string(f) + " = " +
                        std::to_string(alpha[f]));
    }
    trace += std::sqrt(2.0 * f + 1.0) * alpha[f];
  }
  const double expected = static_cast<double>(s.dim());
  if (std::abs(trace - expected) > tolerance) {
    throw DomainError("alpha vector: normalization sum sqrt(2F+1) alpha_F = " + std::to_string(trace) +
                      ", expected " + std::to_string(expected));
  }
  return AlphaVector(s, std::move(alpha));
}

std::vector<double> AlphaVector::channel_weights() const {
  std::vector<double> w(alpha_.size());
  const double n = static_cast<double>(spin_.dim());
  for (std::size_t f = 0; f < alpha_.size(); ++f) w[f] = alpha_[f] * std::sqrt(2.0 * f + 1.0) / n;
  return w;
}

namespace {

void require_two_site(const DensityMatrix& rho, SpinLabel s, const char* what) {
  const std::size_t n = s.dim();
  if (rho.dim() != n * n) {
    throw DomainError(std::string(what) + ": state has dimension " + std::to_string(rho.dim()) +
                      ", spin " + s.to_string() + " needs " + std::to_string(n * n));
  }
}

}  // namespace

AlphaVector alpha_from_density(const DensityMatrix& rho, SpinLabel s) {
  require_two_site(rho, s, "alpha_from_density");
  const auto projectors = channel_projectors(s);
  const double n = static_cast<double>(s.dim());
  std::vector<double> alpha;
  for (std::size_t f = 0; f < projectors.size(); ++f) {
    alpha.push_back(n / std::sqrt(2.0 * f + 1.0) * rho.expectation(projectors[f]));
  }
  return AlphaVector::create(s, std::move(alpha));
}

DensityMatrix density_from_alpha(const AlphaVector& alpha) {
  const SpinLabel s = alpha.spin();
  const auto projectors = channel_projectors(s);
  const double n = static_cast<double>(s.dim());
  ComplexMatrix rho(s.dim() * s.dim(), s.dim() * s.dim());
  for (std::size_t f = 0; f < projectors.size(); ++f) {
    rho += projectors[f] * Complex(alpha[f] / (n * std::sqrt(2.0 * f + 1.0)));
  }
  return DensityMatrix::from_construction(std::move(rho), {s.dim(), s.dim()});
}

ComplexMatrix operator_from_k_weights(SpinLabel s, std::span<const double> k_weights) {
  if (k_weights.size() != s.dim()) throw DomainError("operator_from_k_weights: wrong length");
  const auto projectors = k_projectors(s);
  const double n = static_cast<double>(s.dim());
  ComplexMatrix out(s.dim() * s.dim(), s.dim() * s.dim());
  for (std::size_t k = 0; k < projectors.size(); ++k) {
    out += projectors[k] * Complex(k_weights[k] / (n * std::sqrt(2.0 * k + 1.0)));
  }
  return out;
}

DensityMatrix twirl(const DensityMatrix& rho, SpinLabel s) {
  require_two_site(rho, s, "twirl");
  const auto projectors = channel_projectors(s);
  ComplexMatrix out(rho.dim(), rho.dim());
  for (std::size_t f = 0; f < projectors.size(); ++f) {
    out += projectors[f] * Complex(rho.expectation(projectors[f]) / (2.0 * f + 1.0));
  }
  return DensityMatrix::from_construction(std::move(out), rho.local_dims());
}

std::vector<double> negativity_channel_terms(const AlphaVector& alpha) {
  const SpinLabel s = alpha.spin();
  const auto transformed = alpha_prime(theta_matrix(s), alpha);
  const double n = static_cast<double>(s.dim());
  std::vector<double> terms;
  for (std::size_t k = 0; k < transformed.size(); ++k) {
    terms.push_back(std::max(0.0, -std::sqrt(2.0 * k + 1.0) * transformed[k]) / n);
  }
  return terms;
}

NegativityResult negativity_formula(const AlphaVector& alpha) {
  auto terms = negativity_channel_terms(alpha);
  terms.pop_back();  // K = 2s never contributes
  NegativityResult r;
  r.method = NegativityResult::Method::kFormula;
  for (double t : terms) r.value += t;
  r.per_channel = std::move(terms);
  return r;
}

namespace {

NegativityResult negativity_of_transposed(const ComplexMatrix& transposed) {
  NegativityResult r;
  r.method = NegativityResult::Method::kBrute;
  for (double ev : hermitian_eigenvalues(transposed)) {
    if (ev < 0.0) {
      r.value += -ev;
      r.per_channel.push_back(-ev);
    }
  }
  return r;
}

}  // namespace

NegativityResult negativity_brute(const DensityMatrix& rho, std::size_t dim_a, std::size_t dim_b) {
  return negativity_of_transposed(partial_transpose(rho.matrix(), dim_a, dim_b));
}

NegativityResult negativity_brute(const DensityMatrix& rho, const std::vector<bool>& transposed) {
  return negativity_of_transposed(partial_transpose(rho.matrix(), rho.local_dims(), transposed));
}

namespace {

void require_spin_one(SpinLabel s) {
  if (s.twice_spin() != 2) {
    throw DomainError("spin-1 closed form requested for spin " + s.to_string());
  }
}

}  // namespace

SpinOneMoments spin1_moments(const AlphaVector& alpha) {
  require_spin_one(alpha.spin());
  const auto p = alpha.channel_weights();
  // lambda = (-2, -1, 1); S = P0 - P1 + P2.
  return {-2.0 * p[0] - p[1] + p[2], 4.0 * p[0] + p[1] + p[2], p[0], p[0] - p[1] + p[2]};
}

SpinOneMoments spin1_moments(const DensityMatrix& rho) {
  const SpinLabel s(2);
  require_two_site(rho, s, "spin1_moments");
  const auto d = dot_operator(s);
  const auto singlet = singlet_vector(s);
  return {rho.expectation(d), rho.expectation(d * d), rho.expectation(outer(singlet, singlet)),
          rho.expectation(swap_matrix(s))};
}

SpinOneNegativity closed_form_negativity_spin1(const SpinOneMoments& m) {
  SpinOneNegativity out;
  out.from_dot_moments.per_channel = {std::max(0.0, 1.0 - m.dot - m.dot_squared) / 3.0,
                                      std::max(0.0, m.dot_squared - 2.0) / 2.0};
  out.from_singlet_and_swap.per_channel = {std::max(0.0, -m.swap) / 3.0,
                                           std::max(0.0, 3.0 * m.singlet - 1.0) / 2.0};
  for (auto* r : {&out.from_dot_moments, &out.from_singlet_and_swap}) {
    r->method = NegativityResult::Method::kFormula;
    for (double t : r->per_channel) r->value += t;
  }
  return out;
}

SpinOneNegativity closed_form_negativity_spin1(const AlphaVector& alpha) {
  return closed_form_negativity_spin1(spin1_moments(alpha));
}

SpinOneNegativity closed_form_negativity_spin1(const DensityMatrix& rho, SpinLabel s) {
  require_spin_one(s);
  return closed_form_negativity_spin1(spin1_moments(rho));
}

DensityMatrix werner_state(SpinLabel s, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("werner_state: p must lie in [0, 1]");
  const double n = static_cast<double>(s.dim());
  const auto id = ComplexMatrix::identity(s.dim() * s.dim());
  const auto swap = swap_matrix(s);
  const auto minus = (id - swap) * Complex(1.0 / (n * (n - 1.0)));
  const auto plus = (id + swap) * Complex(1.0 / (n * (n + 1.0)));
  return DensityMatrix::from_construction(minus * Complex(p) + plus * Complex(1.0 - p),
                                          {s.dim(), s.dim()});
}

DensityMatrix isotropic_state(SpinLabel s, double w) {
  if (!(w >= 0.0 && w <= 1.0)) throw DomainError("isotropic_state: w must lie in [0, 1]");
  const double n = static_cast<double>(s.dim());
  const auto id = ComplexMatrix::identity(s.dim() * s.dim());
  const auto rho1 = pairing_matrix(s) * Complex(1.0 / n);
  // 4s(s+1) = N^2 - 1
  const auto rho2 = (id - rho1) * Complex(1.0 / (n * n - 1.0));
  return DensityMatrix::from_construction(rho1 * Complex(w) + rho2 * Complex(1.0 - w),
                                          {s.dim(), s.dim()});
}

AlphaVector random_alpha(SpinLabel s, std::mt19937_64& rng) {
  const auto weights = simplex_weights(s.dim(), rng);
  const double n = static_cast<double>(s.dim());
  std::vector<double> alpha(weights.size());
  for (std::size_t f = 0; f < weights.size(); ++f) alpha[f] = n * weights[f] / std::sqrt(2.0 * f + 1.0);
  return AlphaVector::create(s, std::move(alpha));
}

}  // namespace spinwit

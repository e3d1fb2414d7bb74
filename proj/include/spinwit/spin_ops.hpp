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
#include <string>
#include <string_view>
#include <vector>

#include "spinwit/matrix.hpp"
#include "spinwit/rational.hpp"

namespace spinwit {

/// Spin quantum number s, stored as the positive integer 2s. The local
/// Hilbert space has dimension N = 2s + 1 with basis ordered m = s, s-1, ..., -s.
class SpinLabel {
 public:
  explicit SpinLabel(int twice_spin);

  /// Accepts "1/2", "3/2", ... and integers "1", "2", ...
  static SpinLabel parse(std::string_view text);

  int twice_spin() const { return twice_spin_; }
  std::size_t dim() const { return static_cast<std::size_t>(twice_spin_) + 1; }
  Rational spin() const { return Rational(twice_spin_, 2); }
  /// s(s+1), exact.
  Rational spin_squared() const { return Rational(twice_spin_ * (twice_spin_ + 2), 4); }
  bool is_half_integer() const { return twice_spin_ % 2 == 1; }
  /// Highest channel label 2s.
  int max_channel() const { return twice_spin_; }
  std::string to_string() const;

  friend bool operator==(SpinLabel a, SpinLabel b) { return a.twice_spin_ == b.twice_spin_; }

 private:
  int twice_spin_;
};

struct SpinTriple {
  ComplexMatrix sx;
  ComplexMatrix sy;
  ComplexMatrix sz;
};

/// Angular-momentum matrices in the |s,m> basis, m descending.
SpinTriple spin_matrices(SpinLabel s);

/// D = s_i . s_j on the N^2-dimensional two-site space.
ComplexMatrix dot_operator(SpinLabel s);

/// <mu nu|S|alpha beta> = delta(mu, beta) delta(nu, alpha).
ComplexMatrix swap_matrix(SpinLabel s);

/// <mu nu|P'|alpha beta> = delta(mu, nu) delta(alpha, beta); equals N |phi+><phi+|.
ComplexMatrix pairing_matrix(SpinLabel s);

/// Projector onto the total-spin-F channel, built from the eigenspaces of D.
/// Throws DomainError unless 0 <= F <= 2s.
ComplexMatrix channel_projector(SpinLabel s, int channel);

/// All channel projectors P_0 .. P_2s from a single diagonalization of D.
std::vector<ComplexMatrix> channel_projectors(SpinLabel s);

/// (2s+1)^{-1/2} sum_m (-1)^{s-m} |m> (x) |-m>.
ComplexVector singlet_vector(SpinLabel s);

/// (2s+1)^{-1/2} sum_m |m> (x) |m>.
ComplexVector pairing_vector(SpinLabel s);

/// Applies |m> -> (-1)^{s-m} |-m> to the second factor of a two-site vector.
ComplexVector partial_time_reversal(SpinLabel s, std::span<const Complex> psi);

/// K = (s_i^x - s_j^x, s_i^y + s_j^y, s_i^z - s_j^z) on the two-site space.
SpinTriple k_components(SpinLabel s);

/// Projector onto the K(K+1) eigenspace of K^2. Throws DomainError unless 0 <= K <= 2s.
ComplexMatrix k_projector(SpinLabel s, int k);

/// All K-channel projectors from a single diagonalization of K^2.
std::vector<ComplexMatrix> k_projectors(SpinLabel s);

/// Embeds a two-site operator acting on sites (i, j) of an n-site chain with
/// local dimension `local_dim`. The first factor of `op` acts on site i.
ComplexMatrix lift_two_site(const ComplexMatrix& op, std::size_t local_dim, std::size_t n_sites,
                            std::size_t i, std::size_t j);

/// Embeds a single-site operator on site i.
ComplexMatrix lift_one_site(const ComplexMatrix& op, std::size_t n_sites, std::size_t i);

/// Haar-like random unitary: Gram-Schmidt on a seeded complex Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);

}  // namespace spinwit

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
#include <utility>
#include <vector>

#include "spinwit/density.hpp"
#include "spinwit/matrix.hpp"
#include "spinwit/spin_ops.hpp"

namespace spinwit {

enum class WitnessKind { kSwap, kSinglet, kPermutation, kHamiltonian };
enum class Verdict { kEntangled, kInconclusive };

std::string to_string(WitnessKind kind);
std::string to_string(Verdict verdict);

/// Outcome of one witness evaluation. Witnesses are one-sided: they certify
/// entanglement or say nothing.
struct WitnessReport {
  WitnessKind kind = WitnessKind::kSwap;
  double expectation = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::kInconclusive;
};

/// Expectations must clear the threshold by this much to count as a detection.
inline constexpr double kWitnessMargin = 1e-10;

/// Largest many-site Hilbert space the dense builders accept.
inline constexpr std::size_t kMaxHilbertDim = 1024;

/// Bijection on sites 0..n-1. The operator built from it moves the factor on
/// site k to site mapping[k].
class Permutation {
 public:
  /// Throws DomainError unless `mapping` is a bijection on 0..n-1.
  static Permutation create(std::vector<std::size_t> mapping);
  static Permutation identity(std::size_t n);
  static Permutation transposition(std::size_t n, std::size_t i, std::size_t j);
  /// Product of the given disjoint cycles; unlisted sites stay fixed.
  static Permutation from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles);

  std::size_t sites() const { return mapping_.size(); }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  std::size_t operator[](std::size_t k) const { return mapping_[k]; }

  /// Cycles of length >= 2, each starting from its smallest site.
  std::vector<std::vector<std::size_t>> cycles() const;
  bool is_identity() const;
  bool is_involution() const;

  /// (this o other)(k) = this(other(k)).
  Permutation compose(const Permutation& other) const;

  friend bool operator==(const Permutation& a, const Permutation& b) { return a.mapping_ == b.mapping_; }

 private:
  explicit Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {}
  std::vector<std::size_t> mapping_;
};

/// <mu_1..mu_n| R |nu_1..nu_n> = prod_k delta(mu_{perm(k)}, nu_k).
/// R(perm_a) R(perm_b) = R(perm_a o perm_b). Throws DomainError when
/// N^n exceeds kMaxHilbertDim.
ComplexMatrix permutation_operator(const Permutation& perm, SpinLabel s);

/// True iff perm is a nontrivial involution (a product of disjoint
/// transpositions): exactly the permutations whose operator is Hermitian with
/// nonnegative expectation on every product state.
bool is_witness_permutation(const Permutation& perm);

/// Why a permutation is or is not accepted, for diagnostics.
std::string classify_permutation(const Permutation& perm);

/// Tr(rho S_ij); entangled iff below -kWitnessMargin.
WitnessReport swap_witness(const DensityMatrix& rho, SpinLabel s, std::pair<std::size_t, std::size_t> sites);

/// Tr(rho P_ij) against 1/(2s+1); entangled iff above it by kWitnessMargin.
WitnessReport singlet_witness(const DensityMatrix& rho, SpinLabel s, std::pair<std::size_t, std::size_t> sites);

/// Tr(rho R); rejects permutations that fail is_witness_permutation.
WitnessReport permutation_witness(const DensityMatrix& rho, const Permutation& perm, SpinLabel s);

/// max(0, -<S>) for an SU(2)-invariant two-qubit state. Rejects states that
/// are not two-qubit or not fixed by twirl within 1e-8.
double concurrence_su2(const DensityMatrix& rho);

/// sum_k p_k (x)_i |phi_i^k><phi_i^k| with seeded Gaussian pure factors and
/// simplex weights.
DensityMatrix random_separable(SpinLabel s, std::size_t n_sites, std::size_t n_terms, std::uint64_t seed);

enum class ChainModel { kSwap, kSinglet };
enum class Boundary { kOpen, kPeriodic };

struct ChainSpec {
  SpinLabel spin{1};
  std::size_t length = 2;
  ChainModel model = ChainModel::kSwap;
  double coupling = 1.0;
  Boundary boundary = Boundary::kOpen;
};

/// Nearest-neighbour bonds; periodic chains need at least three sites.
std::vector<std::pair<std::size_t, std::size_t>> chain_bonds(const ChainSpec& spec);

/// kSwap: J sum S_{i,i+1}. kSinglet: J sum (P_{i,i+1} - 1/(2s+1)), with P
/// from the singlet polynomial in D.
ComplexMatrix chain_hamiltonian(const ChainSpec& spec);

/// Total spin components sum_i T^a_i on the chain (for symmetry checks).
SpinTriple total_spin(SpinLabel s, std::size_t n_sites);

struct ChainWitnessResult {
  WitnessReport report;
  /// Lowest eigenvalue of the witness operator and its eigenvector.
  double ground_energy = 0.0;
  ComplexVector ground_state;
};

/// Ground-state evaluation of a chain witness. kSwap uses W = J sum S_{i,i+1};
/// kSinglet uses W = J sum (1/(2s+1) - P_{i,i+1}), the sign that is
/// nonnegative on separable states. Requires J > 0.
ChainWitnessResult hamiltonian_witness(const ChainSpec& spec);

}  // namespace spinwit

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

#include "spinwit/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "spinwit/error.hpp"
#include "spinwit/projector_poly.hpp"
#include "spinwit/sampling.hpp"
#include "spinwit/su2_states.hpp"

namespace spinwit {

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::kSwap: return "swap";
    case WitnessKind::kSinglet: return "singlet";
    case WitnessKind::kPermutation: return "permutation";
    case WitnessKind::kHamiltonian: return "hamiltonian";
  }
  return "unknown";
}

std::string to_string(Verdict verdict) {
  return verdict == Verdict::kEntangled ? "entangled" : "inconclusive";
}

Permutation Permutation::create(std::vector<std::size_t> mapping) {
  std::vector<bool> seen(mapping.size(), false);
  for (auto image : mapping) {
    if (image >= mapping.size() || seen[image]) {
      throw DomainError("permutation: mapping is not a bijection on 0.." +
                        std::to_string(mapping.size()) + "-1");
    }
    seen[image] = true;
  }
  return Permutation(std::move(mapping));
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = k;
  return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, std::size_t i, std::size_t j) {
  return from_cycles(n, {{i, j}});
}

Permutation Permutation::from_cycles(std::size_t n, const std::vector<std::vector<std::size_t>>& cycles) {
  std::vector<std::size_t> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = k;
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t idx = 0; idx < cycle.size(); ++idx) {
      const auto from = cycle[idx];
      if (from >= n || used[from]) throw DomainError("permutation: cycles are not disjoint sites < n");
      used[from] = true;
      m[from] = cycle[(idx + 1) % cycle.size()];
    }
  }
  return create(std::move(m));
}

std::vector<std::vector<std::size_t>> Permutation::cycles() const {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t start = 0; start < mapping_.size(); ++start) {
    if (seen[start] || mapping_[start] == start) continue;
    std::vector<std::size_t> cycle;
    for (auto k = start; !seen[k]; k = mapping_[k]) {
      seen[k] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < mapping_.size(); ++k)
    if (mapping_[k] != k) return false;
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t k = 0; k < mapping_.size(); ++k)
    if (mapping_[mapping_[k]] != k) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.sites() != sites()) throw DomainError("permutation compose: site counts differ");
  std::vector<std::size_t> m(sites());
  for (std::size_t k = 0; k < sites(); ++k) m[k] = mapping_[other.mapping_[k]];
  return Permutation(std::move(m));
}

namespace {

std::size_t hilbert_dim(SpinLabel s, std::size_t n_sites, const char* what) {
  std::size_t total = 1;
  for (std::size_t k = 0; k < n_sites; ++k) {
    total *= s.dim();
    if (total > kMaxHilbertDim) {
      throw DomainError(std::string(what) + ": " + std::to_string(n_sites) + " sites of spin " +
                        s.to_string() + " exceed the dimension cap " + std::to_string(kMaxHilbertDim));
    }
  }
  return total;
}

std::size_t require_chain_state(const DensityMatrix& rho, SpinLabel s, const char* what) {
  for (auto d : rho.local_dims()) {
    if (d != s.dim()) {
      throw DomainError(std::string(what) + ": state has a local dimension " + std::to_string(d) +
                        ", spin " + s.to_string() + " needs " + std::to_string(s.dim()));
    }
  }
  return rho.sites();
}

void require_sites(std::size_t n_sites, std::pair<std::size_t, std::size_t> sites, const char* what) {
  if (sites.first >= n_sites || sites.second >= n_sites || sites.first == sites.second) {
    throw DomainError(std::string(what) + ": sites (" + std::to_string(sites.first) + ", " +
                      std::to_string(sites.second) + ") invalid for a " + std::to_string(n_sites) +
                      "-site state");
  }
}

}  // namespace

ComplexMatrix permutation_operator(const Permutation& perm, SpinLabel s) {
  const std::size_t n = perm.sites();
  const std::size_t total = hilbert_dim(s, n, "permutation_operator");
  const std::size_t d = s.dim();
  std::vector<std::size_t> strides(n, 1);
  for (std::size_t k = n; k-- > 1;) strides[k - 1] = strides[k] * d;
  ComplexMatrix r(total, total);
  for (std::size_t col = 0; col < total; ++col) {
    std::size_t row = 0;
    for (std::size_t k = 0; k < n; ++k) row += ((col / strides[k]) % d) * strides[perm[k]];
    r(row, col) = 1.0;
  }
  return r;
}

bool is_witness_permutation(const Permutation& perm) {
  return !perm.is_identity() && perm.is_involution();
}

std::string classify_permutation(const Permutation& perm) {
  if (perm.is_identity()) return "identity permutation: expectation is always 1, detects nothing";
  for (const auto& cycle : perm.cycles()) {
    if (cycle.size() > 2) {
      return "contains a " + std::to_string(cycle.size()) +
             "-cycle: operator is not Hermitian and product-state expectations can be complex";
    }
  }
  return "product of disjoint transpositions: Hermitian, nonnegative on product states";
}

WitnessReport swap_witness(const DensityMatrix& rho, SpinLabel s, std::pair<std::size_t, std::size_t> sites) {
  const auto n = require_chain_state(rho, s, "swap_witness");
  require_sites(n, sites, "swap_witness");
  WitnessReport r{WitnessKind::kSwap, 0.0, 0.0, Verdict::kInconclusive};
  r.expectation = rho.expectation(lift_two_site(swap_matrix(s), s.dim(), n, sites.first, sites.second));
  if (r.expectation < r.threshold - kWitnessMargin) r.verdict = Verdict::kEntangled;
  return r;
}

WitnessReport singlet_witness(const DensityMatrix& rho, SpinLabel s,
                              std::pair<std::size_t, std::size_t> sites) {
  const auto n = require_chain_state(rho, s, "singlet_witness");
  require_sites(n, sites, "singlet_witness");
  const auto v = singlet_vector(s);
  WitnessReport r{WitnessKind::kSinglet, 0.0, 1.0 / static_cast<double>(s.dim()), Verdict::kInconclusive};
  r.expectation = rho.expectation(lift_two_site(outer(v, v), s.dim(), n, sites.first, sites.second));
  if (r.expectation > r.threshold + kWitnessMargin) r.verdict = Verdict::kEntangled;
  return r;
}

WitnessReport permutation_witness(const DensityMatrix& rho, const Permutation& perm, SpinLabel s) {
  const auto n = require_chain_state(rho, s, "permutation_witness");
  if (perm.sites() != n) {
    throw DomainError("permutation_witness: permutation acts on " + std::to_string(perm.sites()) +
                      " sites, state has " + std::to_string(n));
  }
  if (!is_witness_permutation(perm)) {
    throw DomainError("permutation_witness: not a witness permutation (" + classify_permutation(perm) + ")");
  }
  WitnessReport r{WitnessKind::kPermutation, 0.0, 0.0, Verdict::kInconclusive};
  r.expectation = rho.expectation(permutation_operator(perm, s));
  if (r.expectation < r.threshold - kWitnessMargin) r.verdict = Verdict::kEntangled;
  return r;
}

double concurrence_su2(const DensityMatrix& rho) {
  const SpinLabel half(1);
  if (rho.local_dims() != std::vector<std::size_t>{2, 2}) {
    throw DomainError("concurrence_su2: expects a two-qubit state");
  }
  if (max_abs_diff(twirl(rho, half).matrix(), rho.matrix()) > 1e-8) {
    throw DomainError("concurrence_su2: state is not SU(2)-invariant (twirl moves it by more than 1e-8)");
  }
  return std::max(0.0, -rho.expectation(swap_matrix(half)));
}

DensityMatrix random_separable(SpinLabel s, std::size_t n_sites, std::size_t n_terms, std::uint64_t seed) {
  if (n_sites == 0) throw DomainError("random_separable: need at least one site");
  if (n_terms == 0) throw DomainError("random_separable: need at least one term");
  const std::size_t total = hilbert_dim(s, n_sites, "random_separable");
  std::mt19937_64 rng(seed);
  const auto weights = simplex_weights(n_terms, rng);
  ComplexMatrix rho(total, total);
  for (std::size_t t = 0; t < n_terms; ++t) {
    ComplexVector psi{1.0};
    for (std::size_t k = 0; k < n_sites; ++k) psi = kron(psi, random_unit_vector(s.dim(), rng));
    for (std::size_t r = 0; r < total; ++r) {
      const Complex pr = weights[t] * psi[r];
      for (std::size_t c = 0; c < total; ++c) rho(r, c) += pr * std::conj(psi[c]);
    }
  }
  return DensityMatrix::from_construction(std::move(rho), std::vector<std::size_t>(n_sites, s.dim()));
}

std::vector<std::pair<std::size_t, std::size_t>> chain_bonds(const ChainSpec& spec) {
  if (spec.length < 2) throw DomainError("chain: need at least two sites");
  if (spec.boundary == Boundary::kPeriodic && spec.length < 3) {
    throw DomainError("chain: periodic boundary needs at least three sites");
  }
  std::vector<std::pair<std::size_t, std::size_t>> bonds;
  for (std::size_t i = 0; i + 1 < spec.length; ++i) bonds.emplace_back(i, i + 1);
  if (spec.boundary == Boundary::kPeriodic) bonds.emplace_back(spec.length - 1, 0);
  return bonds;
}

namespace {

ComplexMatrix bond_operator(const ChainSpec& spec) {
  const SpinLabel s = spec.spin;
  if (spec.model == ChainModel::kSwap) return swap_matrix(s);
  const auto p = eval_poly_operator(singlet_coeffs(s), s);
  return p - ComplexMatrix::identity(p.rows()) * Complex(1.0 / static_cast<double>(s.dim()));
}

}  // namespace

ComplexMatrix chain_hamiltonian(const ChainSpec& spec) {
  const std::size_t total = hilbert_dim(spec.spin, spec.length, "chain_hamiltonian");
  const auto bonds = chain_bonds(spec);
  const auto bond = bond_operator(spec);
  ComplexMatrix h(total, total);
  for (const auto& [i, j] : bonds) h += lift_two_site(bond, spec.spin.dim(), spec.length, i, j);
  return h * Complex(spec.coupling);
}

SpinTriple total_spin(SpinLabel s, std::size_t n_sites) {
  const std::size_t total = hilbert_dim(s, n_sites, "total_spin");
  const auto t = spin_matrices(s);
  SpinTriple out{ComplexMatrix(total, total), ComplexMatrix(total, total), ComplexMatrix(total, total)};
  for (std::size_t k = 0; k < n_sites; ++k) {
    out.sx += lift_one_site(t.sx, n_sites, k);
    out.sy += lift_one_site(t.sy, n_sites, k);
    out.sz += lift_one_site(t.sz, n_sites, k);
  }
  return out;
}

ChainWitnessResult hamiltonian_witness(const ChainSpec& spec) {
  if (!(spec.coupling > 0.0)) {
    throw DomainError("hamiltonian_witness: coupling must be positive (antiferromagnetic)");
  }
  auto w = chain_hamiltonian(spec);
  if (spec.model == ChainModel::kSinglet) w *= Complex(-1.0);
  const auto eig = hermitian_eigen(w);
  ChainWitnessResult out;
  out.ground_energy = eig.values.front();
  out.ground_state.resize(w.rows());
  for (std::size_t r = 0; r < w.rows(); ++r) out.ground_state[r] = eig.vectors(r, 0);
  out.report = {WitnessKind::kHamiltonian, out.ground_energy, 0.0, Verdict::kInconclusive};
  if (out.ground_energy < -kWitnessMargin) out.report.verdict = Verdict::kEntangled;
  return out;
}

}  // namespace spinwit

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

#include <cmath>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "spinwit/error.hpp"
#include "spinwit/sampling.hpp"
#include "spinwit/su2_states.hpp"
#include "spinwit/witnesses.hpp"

using namespace spinwit;

namespace {

DensityMatrix product_state(const std::vector<ComplexVector>& factors) {
  ComplexVector psi{1.0};
  std::vector<std::size_t> dims;
  for (const auto& f : factors) {
    psi = kron(psi, f);
    dims.push_back(f.size());
  }
  return DensityMatrix::from_pure(psi, dims);
}

DensityMatrix channel_state(SpinLabel s, int channel) {
  return DensityMatrix::from_construction(
      channel_projector(s, channel) * Complex(1.0 / (2.0 * channel + 1.0)), {s.dim(), s.dim()});
}

}  // namespace

TEST_CASE("swap witness") {
  const SpinLabel half(1);
  const auto singlet = DensityMatrix::from_pure(singlet_vector(half), {2, 2});
  const auto r = swap_witness(singlet, half, {0, 1});
  CHECK(std::abs(r.expectation + 1.0) < 1e-12);
  CHECK(r.verdict == Verdict::kEntangled);
  CHECK(r.kind == WitnessKind::kSwap);

  std::mt19937_64 rng(1);
  for (int ts = 1; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_unit_vector(s.dim(), rng);
      const auto b = random_unit_vector(s.dim(), rng);
      const auto w = swap_witness(product_state({a, b}), s, {0, 1});
      CHECK(std::abs(w.expectation - std::norm(inner(a, b))) < 1e-12);
      CHECK(w.verdict == Verdict::kInconclusive);
    }
    if (ts >= 2) {
      const auto top = channel_state(s, ts - 1);
      const auto w = swap_witness(top, s, {0, 1});
      CHECK(std::abs(w.expectation + 1.0) < 1e-10);
      CHECK(w.verdict == Verdict::kEntangled);
    }
  }
  CHECK_THROWS_AS(swap_witness(singlet, half, {0, 2}), DomainError);
  CHECK_THROWS_AS(swap_witness(singlet, half, {1, 1}), DomainError);
  CHECK_THROWS_AS(swap_witness(singlet, SpinLabel(2), {0, 1}), DomainError);
}

TEST_CASE("swap witness on a chain picks the requested pair") {
  const SpinLabel half(1);
  // singlet on (0, 2), site 1 up.
  ComplexVector psi(8);
  ComplexVector up{1.0, 0.0};
  const auto singlet = singlet_vector(half);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) psi[a * 4 + 0 * 2 + b] = singlet[a * 2 + b] * up[0];
  const auto rho = DensityMatrix::from_pure(psi, {2, 2, 2});
  CHECK(swap_witness(rho, half, {0, 2}).verdict == Verdict::kEntangled);
  CHECK(std::abs(swap_witness(rho, half, {0, 2}).expectation + 1.0) < 1e-12);
  CHECK(swap_witness(rho, half, {0, 1}).verdict == Verdict::kInconclusive);
  CHECK(singlet_witness(rho, half, {0, 2}).verdict == Verdict::kEntangled);
}

TEST_CASE("singlet witness") {
  std::mt19937_64 rng(2);
  for (int ts = 1; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    const auto singlet = DensityMatrix::from_pure(singlet_vector(s), {s.dim(), s.dim()});
    const auto r = singlet_witness(singlet, s, {0, 1});
    CHECK(std::abs(r.expectation - 1.0) < 1e-12);
    CHECK(std::abs(r.threshold - 1.0 / s.dim()) < 1e-15);
    CHECK(r.verdict == Verdict::kEntangled);
    for (int trial = 0; trial < 50; ++trial) {
      const auto p = product_state({random_unit_vector(s.dim(), rng), random_unit_vector(s.dim(), rng)});
      const auto w = singlet_witness(p, s, {0, 1});
      CHECK(w.expectation <= 1.0 / s.dim() + 1e-12);
      CHECK(w.verdict == Verdict::kInconclusive);
    }
  }
  // Spin 1/2: <S> = 1 - 2<P>, so both witnesses agree on invariant states.
  const SpinLabel half(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = density_from_alpha(random_alpha(half, rng));
    const auto sw = swap_witness(rho, half, {0, 1});
    const auto pw = singlet_witness(rho, half, {0, 1});
    CHECK(std::abs(sw.expectation - (1.0 - 2.0 * pw.expectation)) < 1e-12);
    CHECK(sw.verdict == pw.verdict);
  }
}

TEST_CASE("concurrence of SU(2)-invariant two-qubit states") {
  const SpinLabel half(1);
  const auto singlet = DensityMatrix::from_pure(singlet_vector(half), {2, 2});
  CHECK(std::abs(concurrence_su2(singlet) - 1.0) < 1e-12);
  CHECK(std::abs(oracle::spin_flip_concurrence(singlet) - 1.0) < 1e-9);
  const auto mixed = DensityMatrix::create(ComplexMatrix::identity(4) * Complex(0.25), {2, 2});
  CHECK(concurrence_su2(mixed) == 0.0);
  for (double p : {0.0, 0.3, 0.5, 0.6, 0.85, 1.0}) {
    const auto w = werner_state(half, p);
    CHECK(std::abs(concurrence_su2(w) - std::max(0.0, 2.0 * p - 1.0)) < 1e-12);
    CHECK(std::abs(oracle::spin_flip_concurrence(w) - std::max(0.0, 2.0 * p - 1.0)) < 1e-9);
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = density_from_alpha(random_alpha(half, rng));
    CHECK(std::abs(concurrence_su2(rho) - oracle::spin_flip_concurrence(rho)) < 1e-9);
  }
  ComplexVector up_up(4);
  up_up[0] = 1.0;
  CHECK_THROWS_WITH_AS(concurrence_su2(DensityMatrix::from_pure(up_up, {2, 2})),
                       doctest::Contains("invariant"), DomainError);
  CHECK_THROWS_AS(concurrence_su2(werner_state(SpinLabel(2), 0.5)), DomainError);
}

TEST_CASE("permutations") {
  CHECK_THROWS_AS(Permutation::create({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation::create({0, 3}), DomainError);
  const auto cyc = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(cyc.mapping() == std::vector<std::size_t>{1, 2, 0});
  CHECK(cyc.cycles() == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
  CHECK(!cyc.is_involution());
  const auto pairs = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  CHECK(pairs.is_involution());
  CHECK(pairs.compose(pairs).is_identity());
}

TEST_CASE("permutation operators") {
  const SpinLabel half(1);
  const SpinLabel one(2);
  CHECK(max_abs_diff(permutation_operator(Permutation::identity(3), one), ComplexMatrix::identity(27)) == 0.0);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      CHECK(max_abs_diff(permutation_operator(Permutation::transposition(3, i, j), one),
                         lift_two_site(swap_matrix(one), 3, 3, i, j)) == 0.0);

  const auto mirror = Permutation::from_cycles(4, {{0, 3}, {1, 2}});
  CHECK(max_abs_diff(permutation_operator(mirror, half),
                     lift_two_site(swap_matrix(half), 2, 4, 0, 3) * lift_two_site(swap_matrix(half), 2, 4, 1, 2)) ==
        0.0);

  // Factor on site k moves to site perm[k].
  std::mt19937_64 rng(4);
  const auto cyc = Permutation::from_cycles(3, {{0, 1, 2}});
  std::vector<ComplexVector> v;
  for (int k = 0; k < 3; ++k) v.push_back(random_unit_vector(2, rng));
  const auto moved = permutation_operator(cyc, half) * kron(kron(v[0], v[1]), v[2]);
  const auto expected = kron(kron(v[2], v[0]), v[1]);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(moved[k] - expected[k]) < 1e-15);

  // Homomorphism on all pairs of S_3.
  std::vector<Permutation> group;
  for (auto m : std::vector<std::vector<std::size_t>>{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}})
    group.push_back(Permutation::create(m));
  for (const auto& a : group)
    for (const auto& b : group)
      CHECK(max_abs_diff(permutation_operator(a, one) * permutation_operator(b, one),
                         permutation_operator(a.compose(b), one)) == 0.0);

  CHECK_THROWS_AS(permutation_operator(Permutation::identity(11), half), DomainError);
}

TEST_CASE("witness permutation classification") {
  CHECK(is_witness_permutation(Permutation::from_cycles(4, {{0, 1}, {2, 3}})));
  CHECK(is_witness_permutation(Permutation::transposition(3, 0, 2)));
  CHECK(!is_witness_permutation(Permutation::identity(4)));
  const auto cyc = Permutation::from_cycles(3, {{0, 1, 2}});
  CHECK(!is_witness_permutation(cyc));
  CHECK(classify_permutation(cyc).find("3-cycle") != std::string::npos);

  // A 3-cycle has a non-real expectation on some product state.
  const SpinLabel half(1);
  const ComplexVector a{1.0, 0.0};
  const ComplexVector b{1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0)};
  const ComplexVector c{1.0 / std::sqrt(2.0), Complex(0.0, 1.0 / std::sqrt(2.0))};
  const auto psi = kron(kron(a, b), c);
  const auto r = permutation_operator(cyc, half);
  CHECK(std::abs(inner(psi, r * psi).imag()) > 0.1);
  CHECK(max_abs_diff(r, r.adjoint()) > 0.5);
}

TEST_CASE("permutation witness") {
  const SpinLabel half(1);
  const auto singlet = singlet_vector(half);
  const auto two_singlets = DensityMatrix::from_pure(kron(singlet, singlet), {2, 2, 2, 2});
  const auto cross = permutation_witness(two_singlets, Permutation::from_cycles(4, {{0, 2}, {1, 3}}), half);
  // Exchanging the two singlet pairs leaves the state invariant.
  CHECK(std::abs(cross.expectation - 1.0) < 1e-12);
  CHECK(cross.verdict == Verdict::kInconclusive);
  // Consistent with the 01|23 cut being unentangled.
  CHECK(negativity_brute(two_singlets, {false, false, true, true}).value < 1e-10);
  // The 0|123 cut is entangled, and a swap across it fires.
  CHECK(negativity_brute(two_singlets, {true, false, false, false}).value > 0.4);
  ComplexVector up{1.0, 0.0};
  const auto singlet_up_up = DensityMatrix::from_pure(kron(kron(singlet, up), up), {2, 2, 2, 2});
  const auto fires = permutation_witness(singlet_up_up, Permutation::from_cycles(4, {{0, 1}, {2, 3}}), half);
  CHECK(std::abs(fires.expectation + 1.0) < 1e-12);
  CHECK(fires.verdict == Verdict::kEntangled);

  // Single transposition agrees with the swap witness.
  std::mt19937_64 rng(6);
  const auto rho = density_from_alpha(random_alpha(SpinLabel(3), rng));
  const auto via_perm = permutation_witness(rho, Permutation::transposition(2, 0, 1), SpinLabel(3));
  const auto via_swap = swap_witness(rho, SpinLabel(3), {0, 1});
  CHECK(std::abs(via_perm.expectation - via_swap.expectation) < 1e-14);
  CHECK(via_perm.verdict == via_swap.verdict);

  CHECK_THROWS_WITH_AS(permutation_witness(two_singlets, Permutation::from_cycles(4, {{0, 1, 2}}), half),
                       doctest::Contains("3-cycle"), DomainError);
  CHECK_THROWS_AS(permutation_witness(two_singlets, Permutation::identity(4), half), DomainError);
  CHECK_THROWS_AS(permutation_witness(two_singlets, Permutation::transposition(3, 0, 1), half), DomainError);
}

TEST_CASE("random separable states") {
  const SpinLabel one(2);
  const auto pure = random_separable(one, 2, 1, 10);
  CHECK(std::abs(trace_of_product(pure.matrix(), pure.matrix()).real() - 1.0) < 1e-12);
  CHECK(max_abs_diff(random_separable(one, 2, 3, 10).matrix(), random_separable(one, 2, 3, 10).matrix()) == 0.0);
  CHECK_THROWS_AS(random_separable(one, 2, 0, 1), DomainError);
  CHECK_THROWS_AS(random_separable(SpinLabel(1), 11, 1, 1), DomainError);

  for (int ts = 1; ts <= 3; ++ts) {
    const SpinLabel s(ts);
    for (std::size_t n = 2; n <= 3; ++n) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto rho = random_separable(s, n, 4, seed);
        CHECK_NOTHROW(DensityMatrix::create(rho.matrix(), rho.local_dims()));
        CHECK(swap_witness(rho, s, {0, 1}).expectation >= -1e-10);
        for (std::size_t mask = 1; mask + 1 < (1u << n); ++mask) {
          std::vector<bool> cut(n);
          for (std::size_t k = 0; k < n; ++k) cut[k] = (mask >> k) & 1u;
          CHECK(negativity_brute(rho, cut).value < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("witness soundness on separable samples") {
  for (int ts = 1; ts <= 3; ++ts) {
    const SpinLabel s(ts);
    const auto singlet = singlet_vector(s);
    const auto p0 = outer(singlet, singlet);
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<ComplexMatrix> swaps, singlets;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          swaps.push_back(lift_two_site(swap_matrix(s), s.dim(), n, i, j));
          singlets.push_back(lift_two_site(p0, s.dim(), n, i, j));
        }
      std::mt19937_64 weights_rng(ts * 10 + n);
      std::uniform_real_distribution<double> positive(0.0, 1.0);
      for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto rho = random_separable(s, n, 3, seed);
        double combo = 0.0;
        for (std::size_t k = 0; k < swaps.size(); ++k) {
          const double sw = rho.expectation(swaps[k]);
          const double sg = 1.0 / s.dim() - rho.expectation(singlets[k]);
          CHECK(sw >= -1e-9);
          CHECK(sg >= -1e-9);
          combo += positive(weights_rng) * sw + positive(weights_rng) * sg;
        }
        CHECK(combo >= -1e-9);
      }
    }
  }
}

TEST_CASE("chain hamiltonians") {
  const SpinLabel half(1);
  ChainSpec two{half, 2, ChainModel::kSwap, 1.0, Boundary::kOpen};
  const auto values = hermitian_eigenvalues(chain_hamiltonian(two));
  const std::vector<double> expected{-1, 1, 1, 1};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(values[k] - expected[k]) < 1e-12);

  // Three sites: compare with the sum of transposition operators of S_3, and
  // with the closed-form ground energy -1.
  ChainSpec three{half, 3, ChainModel::kSwap, 1.0, Boundary::kOpen};
  const auto h3 = chain_hamiltonian(three);
  const auto via_perms = permutation_operator(Permutation::transposition(3, 0, 1), half) +
                         permutation_operator(Permutation::transposition(3, 1, 2), half);
  CHECK(max_abs_diff(h3, via_perms) == 0.0);
  CHECK(std::abs(hermitian_eigenvalues(h3).front() + 1.0) < 1e-12);

  // Four sites: 2 E_Heisenberg + 3/2 = 2(-3/4 - sqrt(3)/2) + 3/2 = -sqrt(3).
  ChainSpec four{half, 4, ChainModel::kSwap, 1.0, Boundary::kOpen};
  CHECK(std::abs(hermitian_eigenvalues(chain_hamiltonian(four)).front() + std::sqrt(3.0)) < 1e-12);

  for (auto model : {ChainModel::kSwap, ChainModel::kSinglet}) {
    for (int ts = 1; ts <= 2; ++ts) {
      ChainSpec spec{SpinLabel(ts), 4, model, 0.8, Boundary::kPeriodic};
      const auto h = chain_hamiltonian(spec);
      CHECK(is_hermitian(h, 1e-12));
      const auto total = total_spin(spec.spin, spec.length);
      CHECK(commutator(h, total.sx).max_abs() < 1e-10);
      CHECK(commutator(h, total.sy).max_abs() < 1e-10);
      CHECK(commutator(h, total.sz).max_abs() < 1e-10);
    }
  }

  // The singlet model is built from the singlet polynomial lifted pairwise.
  const SpinLabel one(2);
  ChainSpec singlet_chain{one, 3, ChainModel::kSinglet, 2.0, Boundary::kOpen};
  const auto v = singlet_vector(one);
  const auto bond = outer(v, v) - ComplexMatrix::identity(9) * Complex(1.0 / 3.0);
  const auto expected_h = (lift_two_site(bond, 3, 3, 0, 1) + lift_two_site(bond, 3, 3, 1, 2)) * Complex(2.0);
  CHECK(max_abs_diff(chain_hamiltonian(singlet_chain), expected_h) < 1e-12);

  CHECK_THROWS_AS(chain_bonds(ChainSpec{half, 2, ChainModel::kSwap, 1.0, Boundary::kPeriodic}), DomainError);
  CHECK_THROWS_AS(chain_hamiltonian(ChainSpec{half, 11, ChainModel::kSwap, 1.0, Boundary::kOpen}), DomainError);
}

TEST_CASE("hamiltonian witness") {
  const SpinLabel half(1);
  const auto two = hamiltonian_witness({half, 2, ChainModel::kSwap, 1.0, Boundary::kOpen});
  CHECK(std::abs(two.ground_energy + 1.0) < 1e-12);
  CHECK(two.report.verdict == Verdict::kEntangled);
  CHECK(two.report.kind == WitnessKind::kHamiltonian);

  const auto four = hamiltonian_witness({half, 4, ChainModel::kSwap, 1.0, Boundary::kOpen});
  CHECK(four.ground_energy < 0.0);
  CHECK(four.report.verdict == Verdict::kEntangled);
  const auto gs = DensityMatrix::from_pure(four.ground_state, {2, 2, 2, 2});
  // Outer bonds carry -sqrt(3)/2 each, the middle bond exactly zero.
  CHECK(std::abs(swap_witness(gs, half, {0, 1}).expectation + std::sqrt(3.0) / 2.0) < 1e-10);
  CHECK(std::abs(swap_witness(gs, half, {2, 3}).expectation + std::sqrt(3.0) / 2.0) < 1e-10);
  CHECK(std::abs(swap_witness(gs, half, {1, 2}).expectation) < 1e-10);
  CHECK(swap_witness(gs, half, {0, 1}).verdict == Verdict::kEntangled);

  // Singlet-projector witness: W = J sum (1/N - P).
  for (int ts = 1; ts <= 3; ++ts) {
    const SpinLabel s(ts);
    const auto r = hamiltonian_witness({s, 2, ChainModel::kSinglet, 1.0, Boundary::kOpen});
    CHECK(std::abs(r.ground_energy - (1.0 / s.dim() - 1.0)) < 1e-12);
    CHECK(r.report.verdict == Verdict::kEntangled);
  }

  CHECK_THROWS_AS(hamiltonian_witness({half, 3, ChainModel::kSwap, -1.0, Boundary::kOpen}), DomainError);
  CHECK_THROWS_AS(hamiltonian_witness({half, 3, ChainModel::kSwap, 0.0, Boundary::kOpen}), DomainError);
}

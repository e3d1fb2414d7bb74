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
#include "spinwit/density.hpp"
#include "spinwit/error.hpp"
#include "spinwit/matrix.hpp"
#include "spinwit/rational.hpp"
#include "spinwit/spin_ops.hpp"

using namespace spinwit;

namespace {

ComplexMatrix diag(std::initializer_list<double> v) {
  std::vector<double> values(v);
  return ComplexMatrix::diagonal(values);
}

}  // namespace

TEST_CASE("rational arithmetic is exact and reduced") {
  const Rational a(6, -4);
  CHECK(a.numerator_string() == "-3");
  CHECK(a.denominator_string() == "2");
  CHECK(Rational::parse("-67/32") == Rational(-67, 32));
  CHECK(Rational::parse("10/4").to_string() == "5/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK_THROWS_AS(Rational(1, 0), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/x"), DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DomainError);
  CHECK(factorial(20).to_string() == "2432902008176640000");
  CHECK(factorial(37).to_string() == "13763753091226345046315979581580902400000000");
}

TEST_CASE("rational round trips on random 64-bit components") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-(1L << 62), 1L << 62);
  for (int trial = 0; trial < 500; ++trial) {
    long den_a = dist(rng), den_b = dist(rng);
    if (den_a == 0) den_a = 1;
    if (den_b == 0) den_b = 3;
    const Rational a(dist(rng), den_a);
    Rational b(dist(rng), den_b);
    CHECK((a + b) - b == a);
    if (b.is_zero()) b = Rational(5, 7);
    CHECK((a * b) / b == a);
  }
}

TEST_CASE("kron") {
  CHECK(max_abs_diff(kron(ComplexMatrix::identity(2), ComplexMatrix::identity(2)),
                     ComplexMatrix::identity(4)) == 0.0);
  CHECK(max_abs_diff(kron(diag({1, 2}), diag({3, 4})), diag({3, 4, 6, 8})) == 0.0);
  const auto t = spin_matrices(SpinLabel(1));
  CHECK(max_abs_diff(kron(t.sz, t.sz), diag({0.25, -0.25, -0.25, 0.25})) == 0.0);

  const auto a = oracle::random_hermitian(2, 1);
  const auto b = oracle::random_hermitian(3, 2);
  const auto c = oracle::random_hermitian(2, 3);
  CHECK(max_abs_diff(kron(kron(a, b), c), kron(a, kron(b, c))) < 1e-14);
}

TEST_CASE("partial transpose") {
  CHECK(max_abs_diff(partial_transpose(ComplexMatrix::identity(9), 3, 3), ComplexMatrix::identity(9)) ==
        0.0);
  CHECK_THROWS_AS(partial_transpose(ComplexMatrix::identity(6), 2, 2), DomainError);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const std::size_t da = 2 + seed % 3, db = 2 + (seed / 3) % 3;
    const auto m = oracle::random_hermitian(da * db, seed);
    const auto pt = partial_transpose(m, da, db);
    CHECK(max_abs_diff(partial_transpose(pt, da, db), m) == 0.0);
    CHECK(std::abs(pt.trace() - m.trace()) < 1e-12);
    CHECK(is_hermitian(pt, 0.0));
    // The multipartite form agrees on a bipartite cut.
    CHECK(max_abs_diff(partial_transpose(m, {da, db}, {false, true}), pt) == 0.0);
    // Transposing both sites is the full transpose.
    CHECK(max_abs_diff(partial_transpose(m, {da, db}, {true, true}), m.transpose()) == 0.0);
  }
}

TEST_CASE("hermitian_eigen: small cases") {
  const auto eig = hermitian_eigen(diag({3, 1, 2}));
  REQUIRE(eig.values.size() == 3);
  CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(eig.values[1] == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(eig.values[2] == doctest::Approx(3.0).epsilon(1e-15));

  const auto swap_values = hermitian_eigenvalues(swap_matrix(SpinLabel(1)));
  const std::vector<double> expected{-1, 1, 1, 1};
  for (std::size_t k = 0; k < 4; ++k) CHECK(std::abs(swap_values[k] - expected[k]) < 1e-12);

  ComplexMatrix not_hermitian(2, 2);
  not_hermitian(0, 1) = 1.0;
  CHECK_THROWS_AS(hermitian_eigen(not_hermitian), DomainError);

  CHECK(hermitian_eigen(ComplexMatrix(3, 3)).values == std::vector<double>(3, 0.0));
}

TEST_CASE("hermitian_eigen: residual, unitarity and trace identities on random input") {
  for (std::uint64_t seed = 100; seed < 115; ++seed) {
    const std::size_t n = 1 + seed % 40;
    const auto m = oracle::random_hermitian(n, seed);
    const auto eig = hermitian_eigen(m);
    const auto lambda = ComplexMatrix::diagonal(eig.values);
    CHECK(max_abs_diff(m * eig.vectors, eig.vectors * lambda) <= 1e-10 * m.max_abs());
    CHECK(max_abs_diff(eig.vectors.adjoint() * eig.vectors, ComplexMatrix::identity(n)) <= 1e-10);
    for (std::size_t k = 1; k < n; ++k) CHECK(eig.values[k - 1] <= eig.values[k]);
    double sum = 0.0, sum_sq = 0.0;
    for (double v : eig.values) {
      sum += v;
      sum_sq += v * v;
    }
    CHECK(std::abs(sum - m.trace().real()) <= 1e-10);
    CHECK(std::abs(sum_sq - trace_of_product(m, m).real()) <= 1e-9);
  }
}

TEST_CASE("hermitian_eigen: dot operator spectrum") {
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const auto values = hermitian_eigenvalues(dot_operator(s));
    std::vector<double> expected;
    for (int f = 0; f <= ts; ++f) {
      const double lambda = 0.5 * (f * (f + 1) - 2.0 * s.spin_squared().to_double());
      for (int m = 0; m < 2 * f + 1; ++m) expected.push_back(lambda);
    }
    REQUIRE(values.size() == expected.size());
    for (std::size_t k = 0; k < values.size(); ++k) CHECK(std::abs(values[k] - expected[k]) < 1e-12);
  }
}

TEST_CASE("vandermonde_solve") {
  {
    const std::vector<Rational> nodes{Rational(-3, 4), Rational(1, 4)};
    CHECK(vandermonde_solve(nodes, 0) == std::vector<Rational>{Rational(1, 4), Rational(-1)});
  }
  {
    const std::vector<Rational> nodes{Rational(0), Rational(1)};
    CHECK(vandermonde_solve(nodes, 1) == std::vector<Rational>{Rational(0), Rational(1)});
  }
  {
    const std::vector<Rational> nodes{Rational(-2), Rational(-1), Rational(1)};
    CHECK(vandermonde_solve(nodes, 0) ==
          std::vector<Rational>{Rational(-1, 3), Rational(0), Rational(1, 3)});
  }
  const std::vector<Rational> dup{Rational(1), Rational(2), Rational(1)};
  CHECK_THROWS_AS(vandermonde_solve(dup, 0), DomainError);
  CHECK_THROWS_AS(vandermonde_solve(std::vector<Rational>{Rational(1)}, 1), DomainError);
}

TEST_CASE("vandermonde_solve: cardinal property on random distinct nodes") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> nodes;
    while (nodes.size() < 2 + static_cast<std::size_t>(trial % 6)) {
      const Rational candidate(dist(rng), 1 + std::abs(dist(rng)));
      bool fresh = true;
      for (const auto& x : nodes) fresh = fresh && x != candidate;
      if (fresh) nodes.push_back(candidate);
    }
    for (std::size_t target = 0; target < nodes.size(); ++target) {
      const auto c = vandermonde_solve(nodes, target);
      for (std::size_t k = 0; k < nodes.size(); ++k) {
        CHECK(evaluate_polynomial(c, nodes[k]) == Rational(k == target ? 1 : 0));
      }
    }
  }
}

TEST_CASE("density matrix validation") {
  const auto mixed = ComplexMatrix::identity(4) * Complex(0.25);
  CHECK(DensityMatrix::create(mixed, {2, 2}).dim() == 4);
  CHECK_THROWS_WITH_AS(DensityMatrix::create(mixed * Complex(0.9), {2, 2}),
                       doctest::Contains("trace"), DomainError);
  CHECK_THROWS_WITH_AS(DensityMatrix::create(mixed, {2, 3}), doctest::Contains("dimension"), DomainError);
  auto skew = mixed;
  skew(0, 1) = 0.1;
  CHECK_THROWS_WITH_AS(DensityMatrix::create(skew, {2, 2}), doctest::Contains("Hermitian"), DomainError);
  CHECK_THROWS_WITH_AS(DensityMatrix::create(diag({1.5, -0.5}), {2}), doctest::Contains("negative eigenvalue"),
                       DomainError);
}

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

#include <vector>

#include "doctest.h"
#include "spinwit/error.hpp"
#include "spinwit/projector_poly.hpp"

using namespace spinwit;

namespace {

std::vector<Rational> fractions(std::initializer_list<const char*> text) {
  std::vector<Rational> out;
  for (const char* t : text) out.push_back(Rational::parse(t));
  return out;
}

}  // namespace

TEST_CASE("channel spectrum") {
  CHECK(lambda_values(SpinLabel(1)).lambdas == fractions({"-3/4", "1/4"}));
  CHECK(lambda_values(SpinLabel(2)).lambdas == fractions({"-2", "-1", "1"}));
  CHECK(lambda_values(SpinLabel(4)).lambdas == fractions({"-6", "-5", "-3", "0", "4"}));
  for (int ts = 1; ts <= 9; ++ts) {
    const auto l = lambda_values(SpinLabel(ts)).lambdas;
    for (std::size_t f = 1; f < l.size(); ++f) CHECK(l[f - 1] < l[f]);
  }
}

TEST_CASE("printed swap expansions") {
  CHECK(swap_coeffs(SpinLabel(1)).coeffs == fractions({"1/2", "2"}));
  CHECK(swap_coeffs(SpinLabel(2)).coeffs == fractions({"-1", "1", "1"}));
  CHECK(swap_coeffs(SpinLabel(3)).coeffs == fractions({"-67/32", "-9/8", "11/18", "2/9"}));
  CHECK(swap_coeffs(SpinLabel(4)).coeffs == fractions({"-1", "-5/2", "-13/36", "1/6", "1/36"}));
}

TEST_CASE("printed singlet expansions") {
  CHECK(singlet_coeffs(SpinLabel(1)).coeffs == fractions({"1/4", "-1"}));
  CHECK(singlet_coeffs(SpinLabel(2)).coeffs == fractions({"-1/3", "0", "1/3"}));
  CHECK(singlet_coeffs(SpinLabel(3)).coeffs == fractions({"33/128", "31/96", "-5/72", "-1/18"}));
  CHECK(singlet_coeffs(SpinLabel(4)).coeffs == fractions({"0", "-1/3", "-17/180", "1/45", "1/180"}));
  CHECK(projector_coeffs(SpinLabel(1), 0).coeffs == fractions({"1/4", "-1"}));
  CHECK(projector_coeffs(SpinLabel(2), 0).coeffs == fractions({"-1/3", "0", "1/3"}));
  CHECK(projector_coeffs(SpinLabel(3), 0).coeffs == fractions({"33/128", "31/96", "-5/72", "-1/18"}));
}

TEST_CASE("spin 5/2 expansions match an independent symbolic expansion") {
  // Frozen from a computer-algebra expansion of the Lagrange products.
  CHECK(swap_coeffs(SpinLabel(5)).coeffs ==
        fractions({"47417/18432", "-35687/23040", "-14911/14400", "-53/1200", "1/40", "1/450"}));
  CHECK(singlet_coeffs(SpinLabel(5)).coeffs ==
        fractions({"-39215/110592", "14383/138240", "11621/86400", "259/21600", "-7/2160", "-1/2700"}));
}

TEST_CASE("interpolation identities hold exactly up to 2s = 9") {
  for (int ts = 1; ts <= 9; ++ts) {
    const SpinLabel s(ts);
    const auto lambdas = lambda_values(s).lambdas;
    std::vector<Rational> completeness(s.dim()), first_moment(s.dim());
    for (int f = 0; f <= ts; ++f) {
      const auto p = projector_coeffs(s, f);
      REQUIRE(p.coeffs.size() == s.dim());
      for (int g = 0; g <= ts; ++g) CHECK(p.evaluate(lambdas[g]) == Rational(f == g ? 1 : 0));
      for (std::size_t n = 0; n < s.dim(); ++n) {
        completeness[n] += p.coeffs[n];
        first_moment[n] += lambdas[f] * p.coeffs[n];
      }
    }
    std::vector<Rational> unit(s.dim()), linear(s.dim());
    unit[0] = Rational(1);
    linear[1] = Rational(1);
    CHECK(completeness == unit);
    CHECK(first_moment == linear);

    const auto swap = swap_coeffs(s);
    REQUIRE(swap.coeffs.size() == s.dim());
    for (int f = 0; f <= ts; ++f) CHECK(swap.evaluate(lambdas[f]) == Rational((ts + f) % 2 == 0 ? 1 : -1));

    // Product formula and Lagrange route are independent; they must agree exactly.
    CHECK(singlet_coeffs(s) == projector_coeffs(s, 0));
  }
}

TEST_CASE("spin 1/2: S = 1 - 2P") {
  const auto swap = swap_coeffs(SpinLabel(1));
  const auto singlet = singlet_coeffs(SpinLabel(1));
  CHECK(swap.coeffs[0] == Rational(1) - Rational(2) * singlet.coeffs[0]);
  CHECK(swap.coeffs[1] == -Rational(2) * singlet.coeffs[1]);
}

TEST_CASE("projector_coeffs and eval_poly_operator reject bad input") {
  CHECK_THROWS_AS(projector_coeffs(SpinLabel(2), 3), DomainError);
  CHECK_THROWS_AS(projector_coeffs(SpinLabel(2), -1), DomainError);
  CHECK_THROWS_AS(eval_poly_operator(swap_coeffs(SpinLabel(2)), SpinLabel(3)), DomainError);
  RationalPoly unit{3, fractions({"1", "0", "0", "0"})};
  CHECK(max_abs_diff(eval_poly_operator(unit, SpinLabel(3)), ComplexMatrix::identity(16)) == 0.0);
}

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
#include <filesystem>
#include <random>

#include "doctest.h"
#include "spinwit/io.hpp"
#include "spinwit/su2_states.hpp"
#include "spinwit/witnesses.hpp"

using namespace spinwit;

namespace {

std::string two_by_two(const std::string& rows) {
  return "spinwit-density v1\ndim 2\nlocal 2\n" + rows;
}

ParseError density_error(const std::string& text) {
  try {
    parse_density(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("format_double round trips") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> normal;
  for (int i = 0; i < 1000; ++i) {
    const double x = normal(rng) * std::pow(10.0, i % 40 - 20);
    CHECK(std::stod(format_double(x)) == x);
  }
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(-0.0) == "-0");
}

TEST_CASE("singlet density file") {
  const auto singlet = DensityMatrix::from_pure(singlet_vector(SpinLabel(1)), {2, 2});
  const auto text = write_density(singlet);
  CHECK(text.rfind("spinwit-density v1\ndim 4\nlocal 2 2\n", 0) == 0);
  const auto parsed = parse_density(text);
  CHECK(std::abs(parsed.matrix().trace() - Complex(1.0)) < 1e-15);
  CHECK(max_abs_diff(parsed.matrix(), singlet.matrix()) == 0.0);
  CHECK(parsed.local_dims() == std::vector<std::size_t>{2, 2});
  CHECK(write_density(parsed) == text);
}

TEST_CASE("density file diagnostics") {
  // Valid reference: diag(0.5, 0.5).
  CHECK_NOTHROW(parse_density(two_by_two("0.5 0 0 0\n0 0 0.5 0\n")));
  CHECK_NOTHROW(parse_density(two_by_two("0.5 0 0 0\r\n0 0 0.5 0\r\n\n\n")));

  auto e = density_error("spinwit-density v2\ndim 2\nlocal 2\n0.5 0 0 0\n0 0 0.5 0\n");
  CHECK(e.line() == 1);
  CHECK(std::string(e.what()).find("header") != std::string::npos);

  e = density_error(two_by_two("0.5 0 0 0\n0 0 0.5x 0\n"));
  CHECK(e.line() == 5);
  CHECK(e.column() == 5);
  CHECK(std::string(e.what()).find("malformed") != std::string::npos);

  e = density_error(two_by_two("0.5 0 0 0\n0 0 0.5\n"));
  CHECK(e.line() == 5);
  CHECK(std::string(e.what()).find("dimension") != std::string::npos);

  e = density_error("spinwit-density v1\ndim 4\nlocal 2 3\n");
  CHECK(e.line() == 3);
  CHECK(std::string(e.what()).find("dimension") != std::string::npos);

  e = density_error(two_by_two("0.5 0\n"));
  CHECK(std::string(e.what()).find("dimension") != std::string::npos);

  e = density_error(two_by_two("0.5 0 0 0\n"));
  CHECK(std::string(e.what()).find("end of input") != std::string::npos);

  e = density_error(two_by_two("0.5 0 0 0\n0 0 0.5 0\nextra\n"));
  CHECK(e.line() == 6);

  e = density_error(two_by_two("0.5 0 0.1 0\n0 0 0.5 0\n"));
  CHECK(std::string(e.what()).find("Hermitian") != std::string::npos);
  CHECK(e.line() == 4);
  CHECK(e.column() == 3);

  e = density_error(two_by_two("0.45 0 0 0\n0 0 0.45 0\n"));
  CHECK(std::string(e.what()).find("trace") != std::string::npos);

  e = density_error(two_by_two("1.2 0 0 0\n0 0 -0.2 0\n"));
  CHECK(std::string(e.what()).find("negative eigenvalue") != std::string::npos);

  e = density_error(two_by_two("nan 0 0 0\n0 0 0.5 0\n"));
  CHECK(std::string(e.what()).find("malformed") != std::string::npos);

  CHECK_THROWS_AS(parse_density(""), ParseError);
}

TEST_CASE("alpha files") {
  const auto singlet = parse_alpha("spinwit-alpha v1\ntwice_spin 1\nalpha 2 0\n");
  CHECK(singlet.spin() == SpinLabel(1));
  const auto rho = density_from_alpha(singlet);
  CHECK(std::abs(rho.expectation(outer(singlet_vector(SpinLabel(1)), singlet_vector(SpinLabel(1)))) - 1.0) <
        1e-12);

  const auto mixed = parse_alpha("spinwit-alpha v1\ntwice_spin 2\nalpha 0.3333333 0.5773503 0.7453560\n");
  CHECK(negativity_formula(mixed).value < 1e-12);
  CHECK(max_abs_diff(density_from_alpha(mixed).matrix(), ComplexMatrix::identity(9) * Complex(1.0 / 9.0)) < 1e-6);

  try {
    parse_alpha("spinwit-alpha v1\ntwice_spin 1\nalpha 2.5 -0.2\n");
    FAIL("negative entry accepted");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("negative") != std::string::npos);
    CHECK(e.line() == 3);
    CHECK(e.column() == 11);
  }
  CHECK_THROWS_WITH_AS(parse_alpha("spinwit-alpha v1\ntwice_spin 1\nalpha 1 1\n"), doctest::Contains("normalization"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_alpha("spinwit-alpha v1\ntwice_spin 2\nalpha 1 1\n"), doctest::Contains("dimension"),
                       ParseError);
  CHECK_THROWS_AS(parse_alpha("spinwit-alpha v1\ntwice_spin 0\nalpha 1\n"), ParseError);
  CHECK_THROWS_AS(parse_alpha("spinwit-alpha v1\nspin 1\nalpha 2 0\n"), ParseError);

  std::mt19937_64 rng(5);
  for (int ts = 1; ts <= 5; ++ts) {
    const auto a = random_alpha(SpinLabel(ts), rng);
    const auto text = write_alpha(a);
    const auto back = parse_alpha(text);
    CHECK(back.values() == a.values());
    CHECK(write_alpha(back) == text);
  }
}

TEST_CASE("coefficient tables") {
  const auto table = render_coeff_table(make_coeff_table(SpinLabel(3), CoeffOperator::kSwap));
  for (const char* c : {"-67/32", "-9/8", "11/18", "2/9"}) CHECK(table.find(c) != std::string::npos);
  CHECK(table.find('.') == std::string::npos);
  const auto singlet = render_coeff_table(make_coeff_table(SpinLabel(4), CoeffOperator::kSinglet));
  CHECK(singlet.find("0\t0\n") != std::string::npos);
  CHECK(singlet.find("1/180") != std::string::npos);
  const auto proj = make_coeff_table(SpinLabel(2), CoeffOperator::kProjector, 1);
  CHECK(proj.poly.coeffs.size() == 3);
  CHECK_THROWS_AS(make_coeff_table(SpinLabel(2), CoeffOperator::kProjector, 3), DomainError);
}

TEST_CASE("example corpus round trips bit-exactly") {
  std::size_t densities = 0, alphas = 0;
  for (const auto& entry : std::filesystem::directory_iterator(SPINWIT_DATA_DIR)) {
    const auto text = read_text_file(entry.path());
    CAPTURE(entry.path().string());
    if (entry.path().extension() == ".density") {
      CHECK(write_density(parse_density(text)) == text);
      ++densities;
    } else if (entry.path().extension() == ".alpha") {
      CHECK(write_alpha(parse_alpha(text)) == text);
      ++alphas;
    }
  }
  CHECK(densities >= 5);
  CHECK(alphas >= 4);
}

TEST_CASE("file helpers") {
  const auto path = std::filesystem::temp_directory_path() / "spinwit_io_test.alpha";
  write_text_file(path, "spinwit-alpha v1\ntwice_spin 1\nalpha 2 0\n");
  CHECK(parse_alpha(read_text_file(path)).values() == std::vector<double>{2.0, 0.0});
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_text_file(path), DomainError);
}

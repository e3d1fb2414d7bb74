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

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "spinwit/alpha_vector.hpp"
#include "spinwit/density.hpp"
#include "spinwit/error.hpp"
#include "spinwit/projector_poly.hpp"

namespace spinwit {

/// A rejected input file. line() and column() are 1-based; column 0 means
/// the whole line, line 0 means the whole file.
class ParseError : public DomainError {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Decimal rendering with 17 significant digits. Parsing it back gives the
/// same double.
std::string format_double(double x);

/// Text format:
///   spinwit-density v1
///   dim <n>
///   local <d1> <d2> ...
///   n rows of 2n numbers, re/im pairs.
std::string write_density(const DensityMatrix& rho);
DensityMatrix parse_density(std::string_view text);

/// Text format:
///   spinwit-alpha v1
///   twice_spin <2s>
///   alpha <a0> ... <a_2s>
std::string write_alpha(const AlphaVector& alpha);
AlphaVector parse_alpha(std::string_view text);

/// Normalization tolerance for alpha files. Entries off by more than
/// AlphaVector::kTolerance are rescaled onto the exact normalization.
inline constexpr double kAlphaFileTolerance = 1e-6;

enum class CoeffOperator { kSwap, kSinglet, kProjector };

struct CoeffTable {
  SpinLabel spin{1};
  CoeffOperator op = CoeffOperator::kSwap;
  int channel = 0;  // kProjector only
  RationalPoly poly;
};

CoeffTable make_coeff_table(SpinLabel s, CoeffOperator op, int channel = 0);

/// One row per power of D = s_i dot s_j, coefficients as reduced fractions.
std::string render_coeff_table(const CoeffTable& table);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace spinwit

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

#include "spinwit/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace spinwit {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : DomainError([&] {
        std::string where;
        if (line > 0) {
          where = "line " + std::to_string(line);
          if (column > 0) where += ", column " + std::to_string(column);
          where += ": ";
        }
        return where + message;
      }()),
      line_(line),
      column_(column) {}

std::string format_double(double x) {
  char buf[32];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf, static_cast<std::size_t>(n));
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    ++number;
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t') ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

class LineCursor {
 public:
  explicit LineCursor(std::string_view text) : lines_(tokenize(text)) {}

  const Line& next(const char* expected) {
    if (index_ >= lines_.size() || (index_ + 1 == lines_.size() && lines_[index_].tokens.empty())) {
      const std::size_t at = lines_.empty() ? 1 : lines_.back().number;
      throw ParseError(at, 0, std::string("malformed file: unexpected end of input, expected ") + expected);
    }
    return lines_[index_++];
  }

  void expect_end() const {
    for (std::size_t i = index_; i < lines_.size(); ++i) {
      if (!lines_[i].tokens.empty()) {
        throw ParseError(lines_[i].number, lines_[i].tokens.front().column,
                         "malformed file: unexpected content after the last record");
      }
    }
  }

 private:
  std::vector<Line> lines_;
  std::size_t index_ = 0;
};

double parse_number(const Line& line, const Token& tok) {
  double value = 0.0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw ParseError(line.number, tok.column,
                     "malformed number '" + std::string(tok.text) + "'");
  }
  return value;
}

std::size_t parse_count(const Line& line, const Token& tok) {
  std::size_t value = 0;
  const char* first = tok.text.data();
  const char* last = first + tok.text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line.number, tok.column,
                     "malformed integer '" + std::string(tok.text) + "'");
  }
  return value;
}

void expect_header(const Line& line, std::string_view tag) {
  if (line.tokens.size() != 2 || line.tokens[0].text != tag || line.tokens[1].text != "v1") {
    throw ParseError(line.number, line.tokens.empty() ? 0 : line.tokens.front().column,
                     "malformed header, expected '" + std::string(tag) + " v1'");
  }
}

void expect_keyword(const Line& line, std::string_view keyword) {
  if (line.tokens.empty() || line.tokens[0].text != keyword) {
    throw ParseError(line.number, line.tokens.empty() ? 0 : line.tokens.front().column,
                     "malformed line, expected keyword '" + std::string(keyword) + "'");
  }
}

}  // namespace

std::string write_density(const DensityMatrix& rho) {
  std::string out = "spinwit-density v1\ndim " + std::to_string(rho.dim()) + "\nlocal";
  for (auto d : rho.local_dims()) out += " " + std::to_string(d);
  out += "\n";
  const auto& m = rho.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ' ';
      out += format_double(m(i, j).real());
      out += ' ';
      out += format_double(m(i, j).imag());
    }
    out += '\n';
  }
  return out;
}

DensityMatrix parse_density(std::string_view text) {
  LineCursor cursor(text);
  expect_header(cursor.next("header"), "spinwit-density");

  const Line& dim_line = cursor.next("'dim <n>'");
  expect_keyword(dim_line, "dim");
  if (dim_line.tokens.size() != 2) {
    throw ParseError(dim_line.number, 0, "malformed line, expected 'dim <n>'");
  }
  const std::size_t n = parse_count(dim_line, dim_line.tokens[1]);
  if (n == 0) throw ParseError(dim_line.number, dim_line.tokens[1].column, "dimension must be positive");

  const Line& local_line = cursor.next("'local <d1> ...'");
  expect_keyword(local_line, "local");
  if (local_line.tokens.size() < 2) {
    throw ParseError(local_line.number, 0, "malformed line, expected at least one local dimension");
  }
  std::vector<std::size_t> local_dims;
  std::size_t product = 1;
  for (std::size_t k = 1; k < local_line.tokens.size(); ++k) {
    const std::size_t d = parse_count(local_line, local_line.tokens[k]);
    if (d == 0) throw ParseError(local_line.number, local_line.tokens[k].column, "local dimension must be positive");
    local_dims.push_back(d);
    product *= d;
  }
  if (product != n) {
    throw ParseError(local_line.number, 0,
                     "dimension mismatch: local dimensions multiply to " + std::to_string(product) +
                         ", header says " + std::to_string(n));
  }

  ComplexMatrix m(n, n);
  std::vector<std::size_t> row_line(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Line& row = cursor.next("matrix row");
    row_line[i] = row.number;
    if (row.tokens.size() != 2 * n) {
      throw ParseError(row.number, 0,
                       "dimension mismatch: row " + std::to_string(i) + " has " +
                           std::to_string(row.tokens.size()) + " numbers, expected " + std::to_string(2 * n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = Complex(parse_number(row, row.tokens[2 * j]), parse_number(row, row.tokens[2 * j + 1]));
    }
  }
  cursor.expect_end();

  const double scale = std::max(1.0, m.max_abs());
  double worst = 0.0;
  std::size_t wi = 0, wj = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double d = std::abs(m(i, j) - std::conj(m(j, i)));
      if (d > worst) {
        worst = d;
        wi = i;
        wj = j;
      }
    }
  if (worst > DensityMatrix::kTolerance * scale) {
    throw ParseError(row_line[wi], 2 * wj + 1,
                     "not Hermitian: entry (" + std::to_string(wi) + "," + std::to_string(wj) +
                         ") differs from the conjugate of its mirror by " + format_double(worst));
  }
  try {
    return DensityMatrix::create(std::move(m), std::move(local_dims));
  } catch (const DomainError& e) {
    throw ParseError(row_line.front(), 0, e.what());
  }
}

std::string write_alpha(const AlphaVector& alpha) {
  std::string out = "spinwit-alpha v1\ntwice_spin " + std::to_string(alpha.spin().twice_spin()) + "\nalpha";
  for (double a : alpha.values()) out += " " + format_double(a);
  out += "\n";
  return out;
}

AlphaVector parse_alpha(std::string_view text) {
  LineCursor cursor(text);
  expect_header(cursor.next("header"), "spinwit-alpha");

  const Line& spin_line = cursor.next("'twice_spin <2s>'");
  expect_keyword(spin_line, "twice_spin");
  if (spin_line.tokens.size() != 2) {
    throw ParseError(spin_line.number, 0, "malformed line, expected 'twice_spin <2s>'");
  }
  const std::size_t twice = parse_count(spin_line, spin_line.tokens[1]);
  if (twice == 0 || twice > 1000) {
    throw ParseError(spin_line.number, spin_line.tokens[1].column, "twice_spin must be a positive integer");
  }
  const SpinLabel s(static_cast<int>(twice));

  const Line& alpha_line = cursor.next("'alpha <a0> ...'");
  expect_keyword(alpha_line, "alpha");
  if (alpha_line.tokens.size() != s.dim() + 1) {
    throw ParseError(alpha_line.number, 0,
                     "dimension mismatch: spin " + s.to_string() + " needs " + std::to_string(s.dim()) +
                         " alpha entries, found " + std::to_string(alpha_line.tokens.size() - 1));
  }
  std::vector<double> values;
  for (std::size_t k = 1; k < alpha_line.tokens.size(); ++k) {
    const double a = parse_number(alpha_line, alpha_line.tokens[k]);
    if (a < -kAlphaFileTolerance) {
      throw ParseError(alpha_line.number, alpha_line.tokens[k].column,
                       "negative alpha entry alpha_" + std::to_string(k - 1) + " = " + format_double(a));
    }
    values.push_back(a);
  }
  cursor.expect_end();
  try {
    auto alpha = AlphaVector::create(s, values, kAlphaFileTolerance);
    double trace = 0.0;
    for (std::size_t f = 0; f < values.size(); ++f) trace += std::sqrt(2.0 * f + 1.0) * values[f];
    const double target = static_cast<double>(s.dim());
    if (std::abs(trace - target) <= AlphaVector::kTolerance) return alpha;
    for (auto& a : values) a = std::max(0.0, a) * (target / trace);
    return AlphaVector::create(s, std::move(values));
  } catch (const DomainError& e) {
    throw ParseError(alpha_line.number, 0, e.what());
  }
}

CoeffTable make_coeff_table(SpinLabel s, CoeffOperator op, int channel) {
  CoeffTable t;
  t.spin = s;
  t.op = op;
  t.channel = channel;
  switch (op) {
    case CoeffOperator::kSwap:
      t.poly = swap_coeffs(s);
      break;
    case CoeffOperator::kSinglet:
      t.poly = singlet_coeffs(s);
      break;
    case CoeffOperator::kProjector:
      t.poly = projector_coeffs(s, channel);
      break;
  }
  return t;
}

std::string render_coeff_table(const CoeffTable& table) {
  std::string name;
  switch (table.op) {
    case CoeffOperator::kSwap:
      name = "swap";
      break;
    case CoeffOperator::kSinglet:
      name = "singlet";
      break;
    case CoeffOperator::kProjector:
      name = "projector F=" + std::to_string(table.channel);
      break;
  }
  std::string out = "# spin " + table.spin.to_string() + ", operator " + name + "\n";
  out += "n\tcoefficient of D^n\n";
  for (std::size_t k = 0; k < table.poly.coeffs.size(); ++k) {
    out += std::to_string(k) + "\t" + table.poly.coeffs[k].to_string() + "\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path.string() + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw DomainError("write failed for '" + path.string() + "'");
}

}  // namespace spinwit

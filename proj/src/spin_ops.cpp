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

#include "spinwit/spin_ops.hpp"

#include <charconv>
#include <cmath>
#include <random>

#include "spinwit/error.hpp"

namespace spinwit {

SpinLabel::SpinLabel(int twice_spin) : twice_spin_(twice_spin) {
  if (twice_spin < 1) {
    throw DomainError("spin label: 2s must be a positive integer, got " + std::to_string(twice_spin));
  }
}

SpinLabel SpinLabel::parse(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc() || ptr != part.data() + part.size() || part.empty()) {
      throw DomainError("spin label: cannot parse '" + std::string(text) + "'");
    }
    return value;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return SpinLabel(2 * parse_int(text));
  if (parse_int(text.substr(slash + 1)) != 2) {
    throw DomainError("spin label: denominator must be 2 in '" + std::string(text) + "'");
  }
  const int twice = parse_int(text.substr(0, slash));
  if (twice % 2 == 0) {
    throw DomainError("spin label: '" + std::string(text) + "' is not in lowest terms");
  }
  return SpinLabel(twice);
}

std::string SpinLabel::to_string() const {
  if (twice_spin_ % 2 == 0) return std::to_string(twice_spin_ / 2);
  return std::to_string(twice_spin_) + "/2";
}

SpinTriple spin_matrices(SpinLabel s) {
  const std::size_t n = s.dim();
  const int ts = s.twice_spin();
  SpinTriple t{ComplexMatrix(n, n), ComplexMatrix(n, n), ComplexMatrix(n, n)};
  for (std::size_t a = 0; a < n; ++a) {
    const int m2 = ts - 2 * static_cast<int>(a);
    t.sz(a, a) = 0.5 * m2;
    if (a == 0) continue;
    // <m+1| s+ |m> = sqrt(s(s+1) - m(m+1)), with |m> at index a and |m+1> at a-1.
    const double ladder = 0.5 * std::sqrt(static_cast<double>(ts * (ts + 2) - m2 * (m2 + 2)));
    t.sx(a - 1, a) = 0.5 * ladder;
    t.sx(a, a - 1) = 0.5 * ladder;
    t.sy(a - 1, a) = Complex(0.0, -0.5 * ladder);
    t.sy(a, a - 1) = Complex(0.0, 0.5 * ladder);
  }
  return t;
}

ComplexMatrix dot_operator(SpinLabel s) {
  const auto t = spin_matrices(s);
  return kron(t.sx, t.sx) + kron(t.sy, t.sy) + kron(t.sz, t.sz);
}

ComplexMatrix swap_matrix(SpinLabel s) {
  const std::size_t n = s.dim();
  ComplexMatrix m(n * n, n * n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) m(mu * n + nu, nu * n + mu) = 1.0;
  return m;
}

ComplexMatrix pairing_matrix(SpinLabel s) {
  const std::size_t n = s.dim();
  ComplexMatrix m(n * n, n * n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t al = 0; al < n; ++al) m(mu * n + mu, al * n + al) = 1.0;
  return m;
}

namespace {

void check_channel(SpinLabel s, int channel, const char* what) {
  if (channel < 0 || channel > s.max_channel()) {
    throw DomainError(std::string(what) + ": channel " + std::to_string(channel) +
                      " outside [0, " + std::to_string(s.max_channel()) + "]");
  }
}

// Eigenvalues of K^2 and of D are spaced at least 1 apart, so a quarter of that
// separates the clusters cleanly.
constexpr double kClusterTolerance = 0.25;

}  // namespace

std::vector<ComplexMatrix> channel_projectors(SpinLabel s) {
  const auto eig = hermitian_eigen(dot_operator(s));
  const double ss = s.spin_squared().to_double();
  std::vector<ComplexMatrix> out;
  for (int f = 0; f <= s.max_channel(); ++f) {
    const double lambda = 0.5 * (f * (f + 1) - 2.0 * ss);
    out.push_back(spectral_projector(eig, lambda, kClusterTolerance));
  }
  return out;
}

ComplexMatrix channel_projector(SpinLabel s, int channel) {
  check_channel(s, channel, "channel_projector");
  return channel_projectors(s)[static_cast<std::size_t>(channel)];
}

ComplexVector singlet_vector(SpinLabel s) {
  const std::size_t n = s.dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector v(n * n);
  // Index a carries m = s - a, so (-1)^{s-m} = (-1)^a and -m sits at index 2s - a.
  for (std::size_t a = 0; a < n; ++a) v[a * n + (n - 1 - a)] = (a % 2 == 0 ? amp : -amp);
  return v;
}

ComplexVector pairing_vector(SpinLabel s) {
  const std::size_t n = s.dim();
  const double amp = 1.0 / std::sqrt(static_cast<double>(n));
  ComplexVector v(n * n);
  for (std::size_t a = 0; a < n; ++a) v[a * n + a] = amp;
  return v;
}

ComplexVector partial_time_reversal(SpinLabel s, std::span<const Complex> psi) {
  const std::size_t n = s.dim();
  if (psi.size() != n * n) throw DomainError("partial_time_reversal: vector length is not N^2");
  ComplexVector out(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double phase = (b % 2 == 0) ? 1.0 : -1.0;
      out[a * n + (n - 1 - b)] = phase * psi[a * n + b];
    }
  return out;
}

SpinTriple k_components(SpinLabel s) {
  const auto t = spin_matrices(s);
  const auto id = ComplexMatrix::identity(s.dim());
  return {kron(t.sx, id) - kron(id, t.sx), kron(t.sy, id) + kron(id, t.sy),
          kron(t.sz, id) - kron(id, t.sz)};
}

std::vector<ComplexMatrix> k_projectors(SpinLabel s) {
  const auto k = k_components(s);
  const auto k2 = k.sx * k.sx + k.sy * k.sy + k.sz * k.sz;
  const auto eig = hermitian_eigen(k2);
  std::vector<ComplexMatrix> out;
  for (int kk = 0; kk <= s.max_channel(); ++kk) {
    out.push_back(spectral_projector(eig, static_cast<double>(kk * (kk + 1)), kClusterTolerance));
  }
  return out;
}

ComplexMatrix k_projector(SpinLabel s, int k) {
  check_channel(s, k, "k_projector");
  return k_projectors(s)[static_cast<std::size_t>(k)];
}

ComplexMatrix lift_two_site(const ComplexMatrix& op, std::size_t local_dim, std::size_t n_sites,
                            std::size_t i, std::size_t j) {
  const std::size_t d = local_dim;
  if (op.rows() != d * d || op.cols() != d * d) {
    throw DomainError("lift_two_site: operator is not (local_dim^2)-square");
  }
  if (i >= n_sites || j >= n_sites || i == j) {
    throw DomainError("lift_two_site: sites (" + std::to_string(i) + ", " + std::to_string(j) +
                      ") invalid for " + std::to_string(n_sites) + " sites");
  }
  std::size_t total = 1;
  for (std::size_t k = 0; k < n_sites; ++k) total *= d;
  // Stride of site k in the row-major index; site 0 is the slowest.
  auto stride = [&](std::size_t site) {
    std::size_t st = 1;
    for (std::size_t k = site + 1; k < n_sites; ++k) st *= d;
    return st;
  };
  const std::size_t si = stride(i);
  const std::size_t sj = stride(j);
  ComplexMatrix out(total, total);
  for (std::size_t row = 0; row < total; ++row) {
    const std::size_t mi = (row / si) % d;
    const std::size_t mj = (row / sj) % d;
    const std::size_t base = row - mi * si - mj * sj;
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        const Complex v = op(mi * d + mj, a * d + b);
        if (v != Complex(0.0)) out(row, base + a * si + b * sj) = v;
      }
  }
  return out;
}

ComplexMatrix lift_one_site(const ComplexMatrix& op, std::size_t n_sites, std::size_t i) {
  if (i >= n_sites) throw DomainError("lift_one_site: site out of range");
  const std::size_t d = op.rows();
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (std::size_t k = 0; k < n_sites; ++k) {
    out = kron(out, k == i ? op : ComplexMatrix::identity(d));
  }
  return out;
}

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix q(n, n);
  for (auto& z : q.entries()) z = Complex(gauss(rng), gauss(rng));
  // Modified Gram-Schmidt over columns.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t prev = 0; prev < c; ++prev) {
      Complex proj = 0.0;
      for (std::size_t r = 0; r < n; ++r) proj += std::conj(q(r, prev)) * q(r, c);
      for (std::size_t r = 0; r < n; ++r) q(r, c) -= proj * q(r, prev);
    }
    double len = 0.0;
    for (std::size_t r = 0; r < n; ++r) len += std::norm(q(r, c));
    len = std::sqrt(len);
    for (std::size_t r = 0; r < n; ++r) q(r, c) /= len;
  }
  return q;
}

}  // namespace spinwit

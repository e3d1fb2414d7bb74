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

#include "spinwit/reproduction.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "spinwit/error.hpp"
#include "spinwit/io.hpp"
#include "spinwit/projector_poly.hpp"
#include "spinwit/sampling.hpp"
#include "spinwit/su2_states.hpp"
#include "spinwit/wigner.hpp"
#include "spinwit/witnesses.hpp"

namespace spinwit {

namespace {

/// Outcome of one check body: failures accumulate messages, notes are
/// informational.
class Tally {
 public:
  void require(bool ok, const std::string& what) {
    ++checked_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  bool passed() const { return failed_ == 0; }
  std::string summary() const {
    std::string out;
    if (failed_ > 0) {
      out = std::to_string(failed_) + " of " + std::to_string(checked_) + " assertions failed: ";
      for (std::size_t i = 0; i < failures_.size(); ++i) out += (i ? "; " : "") + failures_[i];
    } else {
      out = std::to_string(checked_) + " assertions";
    }
    for (const auto& n : notes_) out += "; " + n;
    return out;
  }

 private:
  std::size_t checked_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

std::vector<Rational> parse_all(std::initializer_list<const char*> values) {
  std::vector<Rational> out;
  for (const char* v : values) out.push_back(Rational::parse(v));
  return out;
}

AlphaVector alpha_from_weights(SpinLabel s, const std::vector<double>& weights) {
  std::vector<double> alpha(weights.size());
  for (std::size_t f = 0; f < weights.size(); ++f) {
    alpha[f] = static_cast<double>(s.dim()) * weights[f] / std::sqrt(2.0 * f + 1.0);
  }
  return AlphaVector::create(s, std::move(alpha));
}

void check_exact_coefficients(Tally& t) {
  struct Row {
    int twice;
    std::vector<Rational> swap;
    std::vector<Rational> singlet;
  };
  const std::vector<Row> rows{
      {1, parse_all({"1/2", "2"}), parse_all({"1/4", "-1"})},
      {2, parse_all({"-1", "1", "1"}), parse_all({"-1/3", "0", "1/3"})},
      {3, parse_all({"-67/32", "-9/8", "11/18", "2/9"}), parse_all({"33/128", "31/96", "-5/72", "-1/18"})},
      {4, parse_all({"-1", "-5/2", "-13/36", "1/6", "1/36"}), parse_all({"0", "-1/3", "-17/180", "1/45", "1/180"})},
  };
  for (const auto& r : rows) {
    const SpinLabel s(r.twice);
    t.require(swap_coeffs(s).coeffs == r.swap, "swap expansion for s=" + s.to_string());
    t.require(singlet_coeffs(s).coeffs == r.singlet, "singlet expansion for s=" + s.to_string());
    t.require(projector_coeffs(s, 0).coeffs == r.singlet, "interpolated singlet expansion for s=" + s.to_string());
  }
}

void check_partial_transpose_identity(Tally& t) {
  double worst = 0.0;
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const double d = max_abs_diff(partial_transpose(swap_matrix(s), s.dim(), s.dim()), pairing_matrix(s));
    worst = std::max(worst, d);
    t.require(d <= 1e-12, "swap^T2 vs pairing at s=" + s.to_string() + ": " + sci(d));
  }
  t.note("max deviation " + sci(worst));
}

void check_operator_identities(Tally& t) {
  double worst = 0.0;
  auto near = [&](double d, const std::string& what) {
    worst = std::max(worst, d);
    t.require(d <= 1e-12, what + ": " + sci(d));
  };
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const std::size_t n2 = s.dim() * s.dim();
    const auto id = ComplexMatrix::identity(n2);
    const auto swap = swap_matrix(s);
    const auto dot = dot_operator(s);
    const auto projectors = channel_projectors(s);
    const auto lambdas = lambda_values(s).lambdas;
    const std::string at = " at s=" + s.to_string();
    near(max_abs_diff(swap * swap, id), "S^2 = I" + at);
    near(max_abs_diff(swap, swap.adjoint()), "S = S^dagger" + at);
    near(std::abs(swap.trace() - Complex(static_cast<double>(s.dim()))), "Tr S = N" + at);
    ComplexMatrix sum(n2, n2);
    for (std::size_t f = 0; f < projectors.size(); ++f) {
      sum = sum + projectors[f];
      near(max_abs_diff(dot * projectors[f], projectors[f] * Complex(lambdas[f].to_double())),
           "D P_F = lambda_F P_F" + at);
      for (std::size_t g = 0; g < projectors.size(); ++g) {
        const auto prod = projectors[f] * projectors[g];
        near(f == g ? max_abs_diff(prod, projectors[f]) : prod.max_abs(), "P_F P_G" + at);
      }
    }
    near(max_abs_diff(sum, id), "sum_F P_F = I" + at);
  }
  t.note("max deviation " + sci(worst));
}

void check_negativity_cross_oracle(Tally& t, std::uint64_t seed) {
  double worst = 0.0;
  double worst_top = 0.0;
  for (int ts = 1; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    std::mt19937_64 rng(seed * 1000 + 40 + ts);
    for (int trial = 0; trial < 200; ++trial) {
      const auto alpha = random_alpha(s, rng);
      const double formula = negativity_formula(alpha).value;
      const double brute = negativity_brute(density_from_alpha(alpha), s.dim(), s.dim()).value;
      const double d = std::abs(formula - brute);
      const double top = negativity_channel_terms(alpha).back();
      worst = std::max(worst, d);
      worst_top = std::max(worst_top, top);
      t.require(d <= 1e-9, "formula vs brute at s=" + s.to_string() + ": " + sci(d));
      t.require(top <= 1e-9, "K=2s term at s=" + s.to_string() + ": " + sci(top));
    }
  }
  t.note("800 states, max |formula - brute| " + sci(worst) + ", max K=2s term " + sci(worst_top));
}

void check_theta(Tally& t) {
  double worst = 0.0;
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const auto theta = theta_matrix(s);
    const std::size_t n = theta.size();
    const std::string at = " at s=" + s.to_string();
    for (std::size_t f = 0; f < n; ++f) {
      for (std::size_t k = 0; k < n; ++k) {
        const double sym = std::abs(theta(f, k) - theta(k, f));
        double sq = 0.0;
        for (std::size_t m = 0; m < n; ++m) sq += theta(f, m) * theta(m, k);
        const double inv = std::abs(sq - (f == k ? 1.0 : 0.0));
        worst = std::max({worst, sym, inv});
        t.require(sym <= 1e-10, "symmetry" + at);
        t.require(inv <= 1e-10, "Theta^2 = I" + at);
      }
      const int sign = ((ts + static_cast<int>(f)) % 2 == 0) ? 1 : -1;
      const double row0 = sign * std::sqrt(2.0 * f + 1.0) / static_cast<double>(s.dim());
      t.require(std::abs(theta(0, f) - row0) <= 1e-12, "row F=0, K=" + std::to_string(f) + at);
    }
  }
  t.note("max deviation " + sci(worst));
}

void check_top_channel_state(Tally& t) {
  for (int ts = 2; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    const auto rho = DensityMatrix::from_construction(
        channel_projector(s, ts - 1) * Complex(1.0 / (2.0 * ts - 1.0)), {s.dim(), s.dim()});
    const double swap = swap_witness(rho, s, {0, 1}).expectation;
    const double neg = negativity_brute(rho, s.dim(), s.dim()).value;
    const double expected = 1.0 / s.dim();
    t.require(std::abs(swap + 1.0) <= 1e-10, "<S> = -1 at s=" + s.to_string() + ": " + sci(swap));
    t.require(std::abs(neg - expected) <= 1e-9, "negativity at s=" + s.to_string() + ": " + sci(neg));
    t.require(std::abs(negativity_formula(alpha_from_density(rho, s)).value - expected) <= 1e-9,
              "formula negativity at s=" + s.to_string());
  }
}

void check_spin_one_closed_forms(Tally& t) {
  const SpinLabel one(2);
  std::size_t points = 0;
  std::size_t literal_misses = 0;
  double worst = 0.0;
  for (int i = 0; i <= 9; ++i) {
    for (int j = 0; j <= 4; ++j) {
      const double w0 = i / 9.0;
      const double w1 = (1.0 - w0) * j / 4.0;
      const double w2 = std::max(0.0, 1.0 - w0 - w1);
      const auto alpha = alpha_from_weights(one, {w0, w1, w2});
      const auto rho = density_from_alpha(alpha);
      const auto forms = closed_form_negativity_spin1(rho, one);
      const double brute = negativity_brute(rho, 3, 3).value;
      const double a = forms.from_dot_moments.value;
      const double b = forms.from_singlet_and_swap.value;
      worst = std::max({worst, std::abs(a - b), std::abs(a - brute), std::abs(b - brute)});
      t.require(std::abs(a - b) <= 1e-9, "dot-moment vs singlet/swap form");
      t.require(std::abs(a - brute) <= 1e-9, "dot-moment form vs brute force");
      t.require(std::abs(b - brute) <= 1e-9, "singlet/swap form vs brute force");
      const auto m = spin1_moments(rho);
      const double literal =
          std::max(0.0, -m.dot - m.dot_squared) / 3.0 + std::max(0.0, m.dot_squared - 2.0) / 2.0;
      if (std::abs(literal - brute) > 1e-9) ++literal_misses;
      ++points;
    }
  }
  t.note(std::to_string(points) + " grid points, max deviation " + sci(worst));
  t.note("dot-moment form uses 1 - <D> - <D^2> in its first term; without the constant it misses " +
         std::to_string(literal_misses) + " of " + std::to_string(points) + " points");
}

std::vector<Permutation> witness_permutations(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), 0);
  std::vector<Permutation> out;
  do {
    auto p = Permutation::create(m);
    if (is_witness_permutation(p)) out.push_back(p);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

void check_witness_soundness(Tally& t, std::uint64_t seed, std::size_t samples) {
  for (int ts = 1; ts <= 3; ++ts) {
    const SpinLabel s(ts);
    const auto singlet = singlet_vector(s);
    const auto p0 = outer(singlet, singlet);
    for (std::size_t n = 2; n <= 3; ++n) {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      std::vector<ComplexMatrix> swaps, singlets, perms;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          pairs.emplace_back(i, j);
          swaps.push_back(lift_two_site(swap_matrix(s), s.dim(), n, i, j));
          singlets.push_back(lift_two_site(p0, s.dim(), n, i, j));
        }
      const auto admissible = witness_permutations(n);
      for (const auto& p : admissible) perms.push_back(permutation_operator(p, s));
      const double threshold = 1.0 / s.dim();
      double margin = 1.0;
      std::size_t fired = 0;
      for (std::size_t k = 0; k < samples; ++k) {
        const std::uint64_t sample_seed = seed * 1000003ULL + k * 16 + ts * 4 + n;
        const auto rho = random_separable(s, n, 1 + k % 4, sample_seed);
        for (std::size_t b = 0; b < pairs.size(); ++b) {
          margin = std::min(margin, rho.expectation(swaps[b]));
          margin = std::min(margin, threshold - rho.expectation(singlets[b]));
        }
        for (const auto& r : perms) margin = std::min(margin, rho.expectation(r));
        if (k < 100) {
          for (const auto& b : pairs) {
            if (swap_witness(rho, s, b).verdict != Verdict::kInconclusive) ++fired;
            if (singlet_witness(rho, s, b).verdict != Verdict::kInconclusive) ++fired;
          }
          for (const auto& p : admissible)
            if (permutation_witness(rho, p, s).verdict != Verdict::kInconclusive) ++fired;
        }
      }
      const std::string at = "s=" + s.to_string() + ", n=" + std::to_string(n);
      t.require(margin >= -1e-9, "witness fired on a separable sample at " + at + ": margin " + sci(margin));
      t.require(fired == 0, "witness verdict fired at " + at);
      t.note(at + " min margin " + sci(margin));
    }
  }
  t.note(std::to_string(samples) + " samples per configuration");
}

void check_werner_detection(Tally& t) {
  for (int ts = 1; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    const std::string at = " at s=" + s.to_string();
    for (int k = 1; k <= 10; ++k) {
      const double p = 0.5 + 0.05 * k;
      const auto rho = werner_state(s, p);
      t.require(swap_witness(rho, s, {0, 1}).verdict == Verdict::kEntangled, "swap fires p=" + sci(p) + at);
      t.require(negativity_brute(rho, s.dim(), s.dim()).value > 1e-9, "negativity > 0 p=" + sci(p) + at);
    }
    for (int k = 0; k <= 5; ++k) {
      const double p = 0.1 * k;
      t.require(swap_witness(werner_state(s, p), s, {0, 1}).verdict == Verdict::kInconclusive,
                "swap silent p=" + sci(p) + at);
    }
  }
}

void check_concurrence(Tally& t, std::uint64_t seed) {
  const SpinLabel half(1);
  std::mt19937_64 rng(seed * 1000 + 100);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto rho = density_from_alpha(random_alpha(half, rng));
    const double d = std::abs(concurrence_su2(rho) - oracle::spin_flip_concurrence(rho));
    worst = std::max(worst, d);
    t.require(d <= 1e-9, "concurrence vs spin-flip oracle: " + sci(d));
  }
  for (int k = 0; k <= 20; ++k) {
    const double p = 0.05 * k;
    const double d = std::abs(concurrence_su2(werner_state(half, p)) - std::max(0.0, 2.0 * p - 1.0));
    worst = std::max(worst, d);
    t.require(d <= 1e-9, "Werner concurrence at p=" + sci(p));
  }
  t.note("max deviation " + sci(worst));
}

void check_hamiltonian_witness(Tally& t) {
  const SpinLabel half(1);
  const auto two = hamiltonian_witness({half, 2, ChainModel::kSwap, 1.0, Boundary::kOpen});
  t.require(std::abs(two.ground_energy + 1.0) <= 1e-12, "L=2 ground energy " + sci(two.ground_energy));
  t.require(two.report.verdict == Verdict::kEntangled, "L=2 verdict");

  const ChainSpec four_spec{half, 4, ChainModel::kSwap, 1.0, Boundary::kOpen};
  const auto four = hamiltonian_witness(four_spec);
  t.require(four.ground_energy < 0.0, "L=4 ground energy " + sci(four.ground_energy));
  t.require(four.report.verdict == Verdict::kEntangled, "L=4 verdict");
  const auto gs = DensityMatrix::from_pure(four.ground_state, {2, 2, 2, 2});
  double mean = 0.0;
  std::string bonds;
  const auto all_bonds = chain_bonds(four_spec);
  for (const auto& b : all_bonds) {
    const double v = swap_witness(gs, half, b).expectation;
    mean += v / static_cast<double>(all_bonds.size());
    bonds += (bonds.empty() ? "" : ", ") + sci(std::abs(v) < 1e-12 ? 0.0 : v);
  }
  t.require(mean < 0.0, "L=4 mean nearest-neighbour <S> " + sci(mean));
  t.note("L=4 E0 " + sci(four.ground_energy) + ", bond <S> (" + bonds + "), mean " + sci(mean));
}

// Worked examples attached to individual operations.

void example_spectra_and_interpolation(Tally& t) {
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const auto values = hermitian_eigenvalues(dot_operator(s));
    const auto lambdas = lambda_values(s).lambdas;
    std::size_t idx = 0;
    for (std::size_t f = 0; f < lambdas.size(); ++f)
      for (std::size_t m = 0; m < 2 * f + 1; ++m, ++idx)
        t.require(std::abs(values[idx] - lambdas[f].to_double()) <= 1e-10, "D spectrum at s=" + s.to_string());
  }
  const auto half_nodes = parse_all({"-3/4", "1/4"});
  t.require(vandermonde_solve(half_nodes, 0) == parse_all({"1/4", "-1"}), "Lagrange basis on (-3/4, 1/4)");
  const auto one_nodes = parse_all({"-2", "-1", "1"});
  t.require(vandermonde_solve(one_nodes, 0) == parse_all({"-1/3", "0", "1/3"}), "Lagrange basis on (-2, -1, 1)");
}

void example_operator_expansions(Tally& t) {
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const std::string at = " at s=" + s.to_string();
    t.require(max_abs_diff(eval_poly_operator(swap_coeffs(s), s), swap_matrix(s)) <= 1e-12, "swap polynomial" + at);
    t.require(max_abs_diff(eval_poly_operator(singlet_coeffs(s), s), channel_projector(s, 0)) <= 1e-12,
              "singlet polynomial" + at);
    for (int f = 0; f <= ts; ++f)
      t.require(max_abs_diff(eval_poly_operator(projector_coeffs(s, f), s), channel_projector(s, f)) <= 1e-12,
                "projector polynomial F=" + std::to_string(f) + at);
    t.require(max_abs_diff(partial_transpose(pairing_matrix(s), s.dim(), s.dim()), swap_matrix(s)) <= 1e-12,
              "pairing^T2 = swap" + at);
    // S (e0 x e1) = e1 x e0
    const std::size_t n = s.dim();
    ComplexVector e01(n * n);
    e01[0 * n + 1] = 1.0;
    const auto moved = swap_matrix(s) * e01;
    bool exact = true;
    for (std::size_t k = 0; k < n * n; ++k) exact = exact && moved[k] == Complex(k == 1 * n + 0 ? 1.0 : 0.0);
    t.require(exact, "swap action on basis product" + at);
  }
  const SpinLabel half(1);
  t.require(max_abs_diff(channel_projector(half, 0),
                         ComplexMatrix::identity(4) * Complex(0.25) - dot_operator(half)) <= 1e-12,
            "s=1/2 singlet = 1/4 - D");
  const auto table = render_coeff_table(make_coeff_table(SpinLabel(3), CoeffOperator::kSwap));
  for (const char* c : {"2/9", "11/18", "-9/8", "-67/32"})
    t.require(table.find(c) != std::string::npos, std::string("coefficient table entry ") + c);
}

void example_states(Tally& t) {
  const SpinLabel half(1);
  const double r = 1.0 / std::sqrt(2.0);
  const auto singlet = singlet_vector(half);
  const double sign = singlet[1].real() > 0 ? 1.0 : -1.0;
  t.require(std::abs(singlet[0]) + std::abs(singlet[3]) <= 1e-15 && std::abs(singlet[1] - Complex(sign * r)) <= 1e-15 &&
                std::abs(singlet[2] + Complex(sign * r)) <= 1e-15,
            "s=1/2 singlet vector");
  const auto pairing = pairing_vector(half);
  t.require(std::abs(pairing[0] - Complex(r)) <= 1e-15 && std::abs(pairing[3] - Complex(r)) <= 1e-15 &&
                std::abs(pairing[1]) + std::abs(pairing[2]) <= 1e-15,
            "s=1/2 pairing vector");
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const auto mapped = partial_time_reversal(s, pairing_vector(s));
    const auto target = singlet_vector(s);
    t.require(std::abs(std::abs(inner(mapped, target)) - 1.0) <= 1e-12,
              "time reversal of pairing state at s=" + s.to_string());
  }
}

void example_transposed_states(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000 + 200);
  for (int ts = 1; ts <= 5; ++ts) {
    const SpinLabel s(ts);
    const auto theta = theta_matrix(s);
    const auto oracle_theta = oracle::theta_by_partial_transpose(s);
    const std::size_t n = s.dim();
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t k = 0; k < n; ++k)
        t.require(std::abs(theta(f, k) - oracle_theta[k * n + f]) <= 1e-12, "Theta vs trace oracle");
    for (int trial = 0; trial < 5; ++trial) {
      const auto alpha = random_alpha(s, rng);
      const auto pt = partial_transpose(density_from_alpha(alpha).matrix(), n, n);
      const auto rebuilt = operator_from_k_weights(s, alpha_prime(theta, alpha));
      t.require(max_abs_diff(pt, rebuilt) <= 1e-10, "rho^T2 from Theta alpha at s=" + s.to_string());
    }
    // Isotropic partial transpose is a combination of I and S.
    const auto iso = partial_transpose(isotropic_state(s, 0.7).matrix(), n, n);
    const auto swap = swap_matrix(s);
    const double b = (trace_of_product(iso, swap).real() - iso.trace().real() * static_cast<double>(n) /
                                                             static_cast<double>(n * n)) /
                     (static_cast<double>(n * n) - 1.0);
    const double a = (iso.trace().real() - b * static_cast<double>(n)) / static_cast<double>(n * n);
    const auto fit = ComplexMatrix::identity(n * n) * Complex(a) + swap * Complex(b);
    t.require(max_abs_diff(iso, fit) <= 1e-12, "isotropic^T2 in span{I, S} at s=" + s.to_string());
  }
  const SpinLabel one(2);
  const auto p1 = DensityMatrix::from_construction(channel_projector(one, 1) * Complex(1.0 / 3.0), {3, 3});
  const auto forms = closed_form_negativity_spin1(p1, one);
  t.require(std::abs(negativity_brute(p1, 3, 3).value - 1.0 / 3.0) <= 1e-9, "P_1/3 brute negativity");
  t.require(std::abs(forms.from_dot_moments.value - 1.0 / 3.0) <= 1e-9, "P_1/3 dot-moment form");
  t.require(std::abs(forms.from_singlet_and_swap.value - 1.0 / 3.0) <= 1e-9, "P_1/3 singlet/swap form");
}

void example_witnesses(Tally& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 1000 + 300);
  for (int ts = 1; ts <= 4; ++ts) {
    const SpinLabel s(ts);
    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_unit_vector(s.dim(), rng);
      const auto b = random_unit_vector(s.dim(), rng);
      const auto rho = DensityMatrix::from_pure(kron(a, b), {s.dim(), s.dim()});
      const auto sw = swap_witness(rho, s, {0, 1});
      const auto sg = singlet_witness(rho, s, {0, 1});
      t.require(std::abs(sw.expectation - std::norm(inner(a, b))) <= 1e-12 && sw.verdict == Verdict::kInconclusive,
                "product state swap expectation");
      t.require(sg.expectation <= 1.0 / s.dim() + 1e-12 && sg.verdict == Verdict::kInconclusive,
                "product state singlet bound");
    }
  }
  const SpinLabel half(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto rho = density_from_alpha(random_alpha(half, rng));
    const auto sw = swap_witness(rho, half, {0, 1});
    const auto sg = singlet_witness(rho, half, {0, 1});
    t.require(std::abs(sw.expectation - (1.0 - 2.0 * sg.expectation)) <= 1e-12 && sw.verdict == sg.verdict,
              "s=1/2 swap and singlet verdicts");
  }
  const SpinLabel one(2);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      t.require(max_abs_diff(permutation_operator(Permutation::transposition(3, i, j), one),
                             lift_two_site(swap_matrix(one), 3, 3, i, j)) == 0.0,
                "transposition = lifted swap");
  t.require(max_abs_diff(permutation_operator(Permutation::from_cycles(4, {{0, 3}, {1, 2}}), half),
                         lift_two_site(swap_matrix(half), 2, 4, 0, 3) * lift_two_site(swap_matrix(half), 2, 4, 1, 2)) ==
                0.0,
            "mirror reflection = product of swaps");
  t.require(is_witness_permutation(Permutation::from_cycles(4, {{0, 1}, {2, 3}})), "(0 1)(2 3) admissible");
  t.require(!is_witness_permutation(Permutation::from_cycles(3, {{0, 1, 2}})), "3-cycle not admissible");
  const auto pairs = Permutation::from_cycles(4, {{0, 1}, {2, 3}});
  for (int trial = 0; trial < 20; ++trial) {
    ComplexVector psi{1.0};
    for (int k = 0; k < 4; ++k) psi = kron(psi, random_unit_vector(2, rng));
    const auto r = permutation_witness(DensityMatrix::from_pure(psi, {2, 2, 2, 2}), pairs, half);
    t.require(r.expectation >= -1e-12 && r.verdict == Verdict::kInconclusive, "product state permutation witness");
  }
}

struct CheckSpec {
  const char* id;
  const char* name;
  const char* citation;
  std::function<void(Tally&)> body;
};

}  // namespace

std::vector<CheckResult> run_reproduction(const ReproductionOptions& options) {
  const std::uint64_t seed = options.seed;
  std::vector<CheckSpec> specs{
      {"1", "exact coefficient reproduction", "swap and singlet expansions in powers of s_i.s_j, s = 1/2 to 2",
       check_exact_coefficients},
      {"2", "partial-transpose identity", "swap^T2 equals the pairing operator", check_partial_transpose_identity},
      {"3", "operator identities", "swap involution, channel projector resolution and spectrum",
       check_operator_identities},
      {"4", "negativity cross-oracle", "negativity from channel weights and 6-j recoupling",
       [seed](Tally& t) { check_negativity_cross_oracle(t, seed); }},
      {"5", "recoupling matrix properties", "Theta symmetric involution with closed-form first row", check_theta},
      {"6", "top-channel pure-state example", "P_{2s-1}/(4s-1): <S> = -1, negativity 1/(2s+1)",
       check_top_channel_state},
      {"7", "spin-1 closed forms", "spin-1 negativity from dot moments and from singlet/swap expectations",
       check_spin_one_closed_forms},
      {"8", "witness soundness", "swap, singlet and permutation witnesses on separable states",
       [seed, &options](Tally& t) { check_witness_soundness(t, seed, options.soundness_samples); }},
      {"9", "witness detection", "swap witness on the Werner family", check_werner_detection},
      {"10", "concurrence", "concurrence of SU(2)-invariant qubit pairs equals max(0, -<S>)",
       [seed](Tally& t) { check_concurrence(t, seed); }},
      {"11", "Hamiltonian witness", "swap chain ground energy as an entanglement witness", check_hamiltonian_witness},
  };
  if (options.include_examples) {
    specs.push_back({"E1", "spectra and interpolation", "eigenvalues of s_i.s_j and Lagrange interpolation nodes",
                     example_spectra_and_interpolation});
    specs.push_back({"E2", "operator expansions", "swap, singlet and channel projectors as polynomials in s_i.s_j",
                     example_operator_expansions});
    specs.push_back({"E3", "singlet and pairing states", "singlet, pairing state and partial time reversal",
                     example_states});
    specs.push_back({"E4", "transposed invariant states", "rho^T2 in the K-channel basis, isotropic states, P_1/3",
                     [seed](Tally& t) { example_transposed_states(t, seed); }});
    specs.push_back({"E5", "witness examples", "product-state bounds, permutation witnesses",
                     [seed](Tally& t) { example_witnesses(t, seed); }});
  }

  std::vector<CheckResult> results;
  for (const auto& spec : specs) {
    CheckResult r;
    r.id = spec.id;
    r.name = spec.name;
    r.citation = spec.citation;
    const auto start = std::chrono::steady_clock::now();
    try {
      Tally t;
      spec.body(t);
      r.passed = t.passed();
      r.detail = t.summary();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

}  // namespace spinwit

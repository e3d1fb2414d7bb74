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

#include <gmp.h>

#include <cstdio>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "spinwit/error.hpp"
#include "spinwit/io.hpp"
#include "spinwit/reproduction.hpp"
#include "spinwit/su2_states.hpp"
#include "spinwit/wigner.hpp"
#include "spinwit/witnesses.hpp"

using namespace spinwit;

namespace {

std::string fixed(double x, int digits = 12) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, x);
  return buf;
}

/// sign * sqrt(square), rendered as a fraction when the root is rational.
std::string render_six_j(const SixJExact& v) {
  if (v.sign == 0) return "0";
  const mpq_class& q = v.square.raw();
  const std::string sign = v.sign < 0 ? "-" : "";
  if (mpz_perfect_square_p(q.get_num_mpz_t()) && mpz_perfect_square_p(q.get_den_mpz_t())) {
    mpz_class num, den;
    mpz_sqrt(num.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(den.get_mpz_t(), q.get_den_mpz_t());
    return sign + num.get_str() + (den == 1 ? "" : "/" + den.get_str());
  }
  return sign + "sqrt(" + v.square.to_string() + ")";
}

std::string render_report(const WitnessReport& r) {
  return "kind " + to_string(r.kind) + "\nexpectation " + format_double(r.expectation) + "\nthreshold " +
         format_double(r.threshold) + "\nverdict " + to_string(r.verdict) + "\n";
}

std::vector<std::size_t> parse_index_list(const std::string& text) {
  std::vector<std::size_t> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(token, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == 0 || pos != token.size()) throw DomainError("malformed index list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

struct Options {
  std::string spin = "1/2";
  std::uint64_t seed = 0;

  std::string op = "swap";
  int channel = 0;

  std::vector<std::string> six_j_args;

  std::string alpha_file;
  std::string density_file;
  bool random = false;
  std::string method = "both";

  std::string kind = "swap";
  std::string sites = "0,1";
  std::string perm;
  double werner = -1.0;
  std::size_t separable_sites = 0;

  std::size_t length = 2;
  std::string model = "swap";
  double coupling = 1.0;
  std::string boundary = "open";

  std::size_t samples = 10000;
  bool skip_examples = false;
};

int cmd_coeffs(const Options& o) {
  const auto s = SpinLabel::parse(o.spin);
  CoeffOperator op = CoeffOperator::kSwap;
  if (o.op == "singlet") op = CoeffOperator::kSinglet;
  if (o.op == "projector") op = CoeffOperator::kProjector;
  std::cout << render_coeff_table(make_coeff_table(s, op, o.channel));
  return 0;
}

int cmd_sixj(const Options& o) {
  SixJInput in;
  for (std::size_t k = 0; k < 6; ++k) {
    const auto& a = o.six_j_args[k];
    if (a == "0") {
      in.twice[k] = 0;
    } else {
      in.twice[k] = SpinLabel::parse(a).twice_spin();
    }
  }
  const auto v = six_j_exact(in);
  std::cout << "exact " << render_six_j(v) << "\nvalue " << format_double(v.to_double()) << "\n";
  return 0;
}

int cmd_theta(const Options& o) {
  const auto s = SpinLabel::parse(o.spin);
  const auto theta = theta_matrix(s);
  std::cout << "# spin " << s.to_string() << ", rows F, columns K\n";
  for (std::size_t f = 0; f < theta.size(); ++f) {
    for (std::size_t k = 0; k < theta.size(); ++k) std::cout << (k ? "\t" : "") << fixed(theta(f, k));
    std::cout << "\n";
  }
  return 0;
}

int cmd_negativity(const Options& o) {
  const auto s = SpinLabel::parse(o.spin);
  const int sources = (o.alpha_file.empty() ? 0 : 1) + (o.density_file.empty() ? 0 : 1) + (o.random ? 1 : 0);
  if (sources != 1) throw CLI::ValidationError("give exactly one of --alpha, --density, --random");

  std::optional<AlphaVector> alpha;
  std::optional<DensityMatrix> rho;
  if (!o.alpha_file.empty()) {
    alpha = parse_alpha(read_text_file(o.alpha_file));
    if (alpha->spin() != s) throw DomainError("alpha file is for spin " + alpha->spin().to_string());
    rho = density_from_alpha(*alpha);
  } else if (!o.density_file.empty()) {
    rho = parse_density(read_text_file(o.density_file));
    if (rho->local_dims() != std::vector<std::size_t>{s.dim(), s.dim()}) {
      throw DomainError("density file does not describe two spin-" + s.to_string() + " sites");
    }
    if (o.method != "brute") {
      const auto twirled = twirl(*rho, s);
      if (max_abs_diff(twirled.matrix(), rho->matrix()) > 1e-8) {
        throw DomainError("state is not SU(2)-invariant; the channel formula needs an invariant state (use --method brute)");
      }
      alpha = alpha_from_density(*rho, s);
    }
  } else {
    std::mt19937_64 rng(o.seed);
    alpha = random_alpha(s, rng);
    rho = density_from_alpha(*alpha);
    std::cout << "alpha";
    for (double a : alpha->values()) std::cout << " " << format_double(a);
    std::cout << "\n";
  }

  std::optional<double> formula, brute;
  if (o.method != "brute") {
    formula = negativity_formula(*alpha).value;
    std::cout << "formula " << format_double(*formula) << "\n";
  }
  if (o.method != "formula") {
    brute = negativity_brute(*rho, s.dim(), s.dim()).value;
    std::cout << "brute " << format_double(*brute) << "\n";
  }
  if (formula && brute) std::cout << "difference " << format_double(std::abs(*formula - *brute)) << "\n";
  if (alpha && s.twice_spin() == 2) {
    const auto forms = closed_form_negativity_spin1(*alpha);
    std::cout << "spin1_dot_moments " << format_double(forms.from_dot_moments.value) << "\n";
    std::cout << "spin1_singlet_swap " << format_double(forms.from_singlet_and_swap.value) << "\n";
  }
  return 0;
}

int cmd_witness(const Options& o) {
  const auto s = SpinLabel::parse(o.spin);
  const int sources = (o.density_file.empty() ? 0 : 1) + (o.werner >= 0.0 ? 1 : 0) + (o.separable_sites ? 1 : 0);
  if (sources != 1) throw CLI::ValidationError("give exactly one of --density, --werner, --separable");
  std::optional<DensityMatrix> rho;
  if (!o.density_file.empty()) {
    rho = parse_density(read_text_file(o.density_file));
  } else if (o.werner >= 0.0) {
    rho = werner_state(s, o.werner);
  } else {
    rho = random_separable(s, o.separable_sites, 4, o.seed);
  }
  if (o.kind == "concurrence") {
    std::cout << "concurrence " << format_double(concurrence_su2(*rho)) << "\n";
    return 0;
  }
  if (o.kind == "permutation") {
    if (o.perm.empty()) throw CLI::ValidationError("--perm is required for --kind permutation");
    std::cout << render_report(permutation_witness(*rho, Permutation::create(parse_index_list(o.perm)), s));
    return 0;
  }
  const auto pair = parse_index_list(o.sites);
  if (pair.size() != 2) throw DomainError("--sites takes two indices, e.g. 0,1");
  const std::pair<std::size_t, std::size_t> sites{pair[0], pair[1]};
  std::cout << render_report(o.kind == "swap" ? swap_witness(*rho, s, sites) : singlet_witness(*rho, s, sites));
  return 0;
}

int cmd_chain(const Options& o) {
  ChainSpec spec{SpinLabel::parse(o.spin), o.length, o.model == "singlet" ? ChainModel::kSinglet : ChainModel::kSwap,
                 o.coupling, o.boundary == "periodic" ? Boundary::kPeriodic : Boundary::kOpen};
  const auto result = hamiltonian_witness(spec);
  std::cout << render_report(result.report) << "ground_energy " << format_double(result.ground_energy) << "\n";
  std::vector<std::size_t> dims(spec.length, spec.spin.dim());
  const auto gs = DensityMatrix::from_pure(result.ground_state, dims);
  for (const auto& b : chain_bonds(spec)) {
    const auto r = swap_witness(gs, spec.spin, b);
    std::cout << "bond " << b.first << "," << b.second << " swap " << fixed(std::abs(r.expectation) < 1e-13 ? 0.0 : r.expectation) << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  ReproductionOptions ro;
  ro.seed = o.seed;
  ro.soundness_samples = o.samples;
  ro.include_examples = !o.skip_examples;
  const auto results = run_reproduction(ro);
  std::size_t passed = 0;
  for (const auto& r : results) {
    if (r.passed) ++passed;
    std::printf("[%s] %-3s %s | %s | %s | %.2fs\n", r.passed ? "PASS" : "FAIL", r.id.c_str(), r.name.c_str(),
                r.citation.c_str(), r.detail.c_str(), r.seconds);
  }
  std::printf("%zu/%zu checks passed\n", passed, results.size());
  std::fflush(stdout);
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spinwit: SU(2) swap and singlet operators, negativity and entanglement witnesses"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);
  Options o;

  auto spin_opt = [&](CLI::App* sub) { sub->add_option("--spin", o.spin, "spin s, e.g. 1/2, 1, 3/2")->capture_default_str(); };
  auto seed_opt = [&](CLI::App* sub) { sub->add_option("--seed", o.seed, "random seed")->capture_default_str(); };

  auto* coeffs = app.add_subcommand("coeffs", "exact expansion of an operator in powers of s_i.s_j");
  spin_opt(coeffs);
  coeffs->add_option("--operator", o.op, "swap, singlet or projector")
      ->check(CLI::IsMember({"swap", "singlet", "projector"}))
      ->capture_default_str();
  coeffs->add_option("--channel", o.channel, "total spin F for --operator projector")->capture_default_str();

  auto* sixj = app.add_subcommand("sixj", "Wigner 6-j symbol {j1 j2 j3; j4 j5 j6}");
  sixj->add_option("j", o.six_j_args, "six angular momenta, e.g. 1/2 1/2 0 1/2 1/2 1")->expected(6)->required();

  auto* theta = app.add_subcommand("theta", "recoupling matrix between F and K channels");
  spin_opt(theta);

  auto* neg = app.add_subcommand("negativity", "negativity of an SU(2)-invariant two-site state");
  spin_opt(neg);
  seed_opt(neg);
  neg->add_option("--alpha", o.alpha_file, "alpha-vector file");
  neg->add_option("--density", o.density_file, "density-matrix file");
  neg->add_flag("--random", o.random, "random invariant state drawn with --seed");
  neg->add_option("--method", o.method, "formula, brute or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}))
      ->capture_default_str();

  auto* wit = app.add_subcommand("witness", "evaluate a witness on a state");
  spin_opt(wit);
  seed_opt(wit);
  wit->add_option("--kind", o.kind, "swap, singlet, permutation or concurrence")
      ->check(CLI::IsMember({"swap", "singlet", "permutation", "concurrence"}))
      ->capture_default_str();
  wit->add_option("--density", o.density_file, "density-matrix file");
  wit->add_option("--werner", o.werner, "two-site Werner state with this antisymmetric weight p")
      ->check(CLI::Range(0.0, 1.0));
  wit->add_option("--separable", o.separable_sites, "random separable state on this many sites");
  wit->add_option("--sites", o.sites, "site pair for swap/singlet, e.g. 0,2")->capture_default_str();
  wit->add_option("--perm", o.perm, "site images for --kind permutation, e.g. 1,0,3,2");

  auto* chain = app.add_subcommand("chain", "ground state of a swap or singlet chain as a witness");
  spin_opt(chain);
  chain->add_option("--length", o.length, "number of sites")->capture_default_str();
  chain->add_option("--model", o.model, "swap or singlet")
      ->check(CLI::IsMember({"swap", "singlet"}))
      ->capture_default_str();
  chain->add_option("--coupling", o.coupling, "J > 0")->capture_default_str();
  chain->add_option("--boundary", o.boundary, "open or periodic")
      ->check(CLI::IsMember({"open", "periodic"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run the reproduction checks");
  seed_opt(verify);
  verify->add_option("--samples", o.samples, "separable samples per configuration")->capture_default_str();
  verify->add_flag("--skip-examples", o.skip_examples, "only the numbered checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*coeffs) return cmd_coeffs(o);
    if (*sixj) return cmd_sixj(o);
    if (*theta) return cmd_theta(o);
    if (*neg) return cmd_negativity(o);
    if (*wit) return cmd_witness(o);
    if (*chain) return cmd_chain(o);
    if (*verify) return cmd_verify(o);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

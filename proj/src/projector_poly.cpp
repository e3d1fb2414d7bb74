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

#include "spinwit/projector_poly.hpp"

#include <string>

#include "spinwit/error.hpp"

namespace spinwit {

ChannelSpectrum lambda_values(SpinLabel s) {
  ChannelSpectrum spec{s.twice_spin(), {}};
  const Rational ss = s.spin_squared();
  for (int f = 0; f <= s.max_channel(); ++f) {
    spec.lambdas.push_back((Rational(f * (f + 1)) - Rational(2) * ss) / Rational(2));
  }
  return spec;
}

RationalPoly projector_coeffs(SpinLabel s, int channel) {
  if (channel < 0 || channel > s.max_channel()) {
    throw DomainError("projector_coeffs: channel " + std::to_string(channel) + " outside [0, " +
                      std::to_string(s.max_channel()) + "]");
  }
  const auto spec = lambda_values(s);
  return {s.twice_spin(), vandermonde_solve(spec.lambdas, static_cast<std::size_t>(channel))};
}

RationalPoly swap_coeffs(SpinLabel s) {
  RationalPoly out{s.twice_spin(), std::vector<Rational>(s.dim())};
  for (int f = 0; f <= s.max_channel(); ++f) {
    const auto pf = projector_coeffs(s, f);
    const bool negative = (s.twice_spin() + f) % 2 == 1;
    for (std::size_t n = 0; n < out.coeffs.size(); ++n) {
      if (negative) {
        out.coeffs[n] -= pf.coeffs[n];
      } else {
        out.coeffs[n] += pf.coeffs[n];
      }
    }
  }
  return out;
}

RationalPoly singlet_coeffs(SpinLabel s) {
  const Rational ss = s.spin_squared();
  std::vector<Rational> acc{Rational(1)};
  for (int k = 1; k <= s.twice_spin(); ++k) {
    const Rational scale(2, k * (k + 1));
    // 1 - scale * (D + s(s+1)) = (1 - scale s(s+1)) - scale D
    const Rational constant = Rational(1) - scale * ss;
    std::vector<Rational> next(acc.size() + 1);
    for (std::size_t n = 0; n < acc.size(); ++n) {
      next[n] += constant * acc[n];
      next[n + 1] -= scale * acc[n];
    }
    acc = std::move(next);
  }
  return {s.twice_spin(), std::move(acc)};
}

ComplexMatrix eval_poly_operator(const RationalPoly& p, SpinLabel s) {
  if (p.coeffs.size() != s.dim() || p.twice_spin != s.twice_spin()) {
    throw DomainError("eval_poly_operator: polynomial has " + std::to_string(p.coeffs.size()) +
                      " coefficients, spin " + s.to_string() + " needs " + std::to_string(s.dim()));
  }
  const auto d = dot_operator(s);
  const auto id = ComplexMatrix::identity(d.rows());
  ComplexMatrix acc(d.rows(), d.cols());
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it) {
    acc = acc * d + id * Complex(it->to_double());
  }
  return acc;
}

}  // namespace spinwit

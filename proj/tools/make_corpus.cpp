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

// Writes the example corpus under the directory given as the only argument.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <random>

#include "spinwit/io.hpp"
#include "spinwit/su2_states.hpp"
#include "spinwit/witnesses.hpp"

using namespace spinwit;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::fprintf(stderr, "usage: %s <output-dir>\n", argv[0]);
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  auto density = [&](const char* name, const DensityMatrix& rho) {
    write_text_file(dir / name, write_density(rho));
  };
  auto alpha = [&](const char* name, const AlphaVector& a) { write_text_file(dir / name, write_alpha(a)); };

  const SpinLabel half(1), one(2), three_halves(3), two(4);
  std::mt19937_64 rng(2026);

  density("singlet_half.density", DensityMatrix::from_pure(singlet_vector(half), {2, 2}));
  density("werner_one_p070.density", werner_state(one, 0.7));
  density("isotropic_half_w060.density", isotropic_state(half, 0.6));
  density("invariant_three_halves.density", density_from_alpha(random_alpha(three_halves, rng)));
  density("separable_three_qubits.density", random_separable(half, 3, 4, 7));
  density("top_channel_two.density",
          DensityMatrix::from_construction(channel_projector(two, 3) * Complex(1.0 / 7.0), {5, 5}));

  alpha("singlet_half.alpha", AlphaVector::create(half, {2.0, 0.0}));
  alpha("mixed_one.alpha", AlphaVector::create(one, {1.0 / 3.0, std::sqrt(3.0) / 3.0, std::sqrt(5.0) / 3.0}));
  alpha("random_one.alpha", random_alpha(one, rng));
  alpha("random_two.alpha", random_alpha(two, rng));
  alpha("werner_three_halves_p080.alpha", alpha_from_density(werner_state(three_halves, 0.8), three_halves));
  return 0;
}

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

// Independent reference computations used to cross-check the library. Not
// part of the installed interface.

#pragma once

#include <cstdint>
#include <vector>

#include "spinwit/density.hpp"
#include "spinwit/matrix.hpp"
#include "spinwit/spin_ops.hpp"

namespace spinwit::oracle {

/// Wootters concurrence of a two-qubit state from the spin-flipped state
/// rho~ = (sy x sy) rho* (sy x sy): max(0, l1 - l2 - l3 - l4) with l_i the
/// descending square roots of the eigenvalues of sqrt(rho) rho~ sqrt(rho).
double spin_flip_concurrence(const DensityMatrix& rho);

/// Theta_{KF} from explicit partial transposes:
///   Tr(P_F^{T2} P'_K) / sqrt((2F+1)(2K+1)).
std::vector<double> theta_by_partial_transpose(SpinLabel s);

/// Seeded random Hermitian matrix with entries of order one.
ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed);

}  // namespace spinwit::oracle

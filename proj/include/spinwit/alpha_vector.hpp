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

#include <span>
#include <vector>

#include "spinwit/spin_ops.hpp"

namespace spinwit {

/// Channel weights of an SU(2)-invariant two-site state,
///   rho = (2s+1)^{-1} sum_F alpha_F (2F+1)^{-1/2} P_F,
///   alpha_F = (2s+1) (2F+1)^{-1/2} Tr(rho P_F).
class AlphaVector {
 public:
  static constexpr double kTolerance = 1e-9;

  /// Rejects negative entries and a violated trace condition
  /// sum_F sqrt(2F+1) alpha_F = 2s+1, both judged with `tolerance`.
  static AlphaVector create(SpinLabel s, std::vector<double> alpha, double tolerance = kTolerance);

  SpinLabel spin() const { return spin_; }
  const std::vector<double>& values() const { return alpha_; }
  double operator[](std::size_t f) const { return alpha_[f]; }
  std::size_t size() const { return alpha_.size(); }

  /// Tr(rho P_F) for each channel.
  std::vector<double> channel_weights() const;

 private:
  AlphaVector(SpinLabel s, std::vector<double> alpha) : spin_(s), alpha_(std::move(alpha)) {}

  SpinLabel spin_;
  std::vector<double> alpha_;
};

}  // namespace spinwit

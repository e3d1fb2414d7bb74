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

#include <cstdint>
#include <string>
#include <vector>

namespace spinwit {

struct CheckResult {
  /// "1".."11" for the acceptance criteria, "E1".. for worked examples.
  std::string id;
  std::string name;
  /// What the check reproduces, in words.
  std::string citation;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct ReproductionOptions {
  std::uint64_t seed = 0;
  /// Separable samples per (spin, sites) configuration in the soundness sweep.
  std::size_t soundness_samples = 10000;
  bool include_examples = true;
};

/// Runs the numbered acceptance criteria 1-11, then the worked examples.
/// Results come back in a fixed order; a check that throws is reported as
/// failed with the exception text.
std::vector<CheckResult> run_reproduction(const ReproductionOptions& options = {});

}  // namespace spinwit

/*
 * Copyright 2026 The lkcfield Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef LKCFIELD_VERIFICATION_HPP
#define LKCFIELD_VERIFICATION_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace lkcfield {

struct CheckResult {
  std::string suite;
  std::string name;
  bool passed = false;
  double observed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  unsigned threads = 0;
  /// Realizations for the field Monte-Carlo check.
  std::uint64_t realizations = 2000;
};

/// Suites: kernel, domain, scale, rotation, gkf, simulation, or all.
/// Raises ConfigInvalid for an unknown suite name.
std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& opts);

struct GoeHistogramCheck {
  double l1 = 0.0;
  double bootstrap_mean = 0.0;
  double bootstrap_sd = 0.0;
  std::uint64_t samples = 0;
  bool passed = false;
};

/// Bins ordered GOE(2) eigenvalue pairs in (midpoint, gap) coordinates and
/// compares the histogram with the pushforward density. Passes when the
/// observed L1 distance is within 3 bootstrap standard deviations of the
/// bootstrap mean.
GoeHistogramCheck goe_histogram_check(std::uint64_t samples, std::uint64_t seed,
                                      int bootstrap = 200, unsigned threads = 1);

}  // namespace lkcfield

#endif  // LKCFIELD_VERIFICATION_HPP

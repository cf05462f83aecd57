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

#ifndef LKCFIELD_SCALE_SPACE_HPP
#define LKCFIELD_SCALE_SPACE_HPP

#include <array>
#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lkcfield/domain.hpp"
#include "lkcfield/kernel.hpp"

namespace lkcfield {

/// Scale band [sigma_low, sigma_high]; s = -ln sigma.
struct ScaleRange {
  double sigma_low = 0.0;
  double sigma_high = 0.0;

  double s_low() const { return -std::log(sigma_high); }
  double s_high() const { return -std::log(sigma_low); }
};

/// Raises InvalidArgument for non-positive or reversed bounds and
/// DegenerateRange when they coincide.
void validate_scale_range(const ScaleRange& range);

inline constexpr std::array<std::string_view, 6> kStrata = {
    "interior", "side", "top", "bottom", "edge_top", "edge_bottom"};

/// L_0 .. L_dim of a parameter space. `breakdown` maps a stratum label to
/// its contribution to every index; the contributions sum to `values`.
struct LkcVector {
  int dim = 0;
  std::vector<double> values;
  std::map<std::string, std::vector<double>> breakdown;
  /// Set when only the top entries are known (rotation space). Entries below
  /// `lowest_valid` are then zero placeholders.
  bool truncated = false;
  int lowest_valid = 0;
};

/// E{Z^k 1(Z >= 0)} for standard normal Z.
double mu_moment(int k);

/// The alternative closed form with 2^n n! / sqrt(2 pi) halved for odd k.
/// Kept for comparison runs only.
double mu_moment_halved_odd(int k);

enum class MuRule { kIntegral, kHalvedOdd };

/// Alpha-curvatures L^{-1/kappa}_i(M), i = 0..N+1, as the sum of the six
/// strata of T x [sigma_low, sigma_high].
LkcVector scale_alpha_lkcs(const KernelMoments& moments, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule = MuRule::kIntegral);

/// Variant for kernels known only through (gamma, kappa).
LkcVector scale_alpha_lkcs(double gamma, double kappa, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule = MuRule::kIntegral);

/// L_i = sum_n (-1/kappa)^n (i+2n)! / ((4 pi)^n n! i!) L^alpha_{i+2n}.
/// The per-stratum breakdown is converted the same way.
LkcVector lkcs_from_alpha(const LkcVector& alpha_lkcs, double kappa);

/// Full pipeline: lkcs_from_alpha(scale_alpha_lkcs(...)).
LkcVector scale_space_lkcs(const KernelMoments& moments, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule = MuRule::kIntegral);
LkcVector scale_space_lkcs(double gamma, double kappa, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule = MuRule::kIntegral);

struct TopTwo {
  double top = 0.0;     // L_{dim}
  double second = 0.0;  // L_{dim-1}
};

/// Closed-form (L_{N+1}, L_N) for a spherically symmetric kernel.
TopTwo scale_top_two(const KernelMoments& moments, const DomainGeometry& geom,
                     const ScaleRange& range);

}  // namespace lkcfield

#endif  // LKCFIELD_SCALE_SPACE_HPP

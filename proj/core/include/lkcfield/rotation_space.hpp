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

#ifndef LKCFIELD_ROTATION_SPACE_HPP
#define LKCFIELD_ROTATION_SPACE_HPP

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "lkcfield/domain.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/random.hpp"
#include "lkcfield/scale_space.hpp"

namespace lkcfield {

/// Parameter set S(sigma2^-2, sigma1^-2) of positive definite N x N
/// matrices with eigenvalues in [lam_lo, lam_hi].
struct RotationParams {
  int N = 0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;

  int K() const { return N * (N + 1) / 2; }
  int D() const { return N + K(); }
  double lam_lo() const { return 1.0 / (sigma2 * sigma2); }
  double lam_hi() const { return 1.0 / (sigma1 * sigma1); }
};

/// sigma1 == sigma2 is accepted (every F-integral is then 0).
void validate_rotation_params(const RotationParams& params);

struct RotationOptions {
  int nodes_per_axis = 24;
  int panels = 4;
  /// Haar samples for R_{N-1} when N >= 3, and the coarser cubature used
  /// for that integral (its cost is nodes x samples).
  std::uint64_t r_samples = 20000;
  int mc_nodes_per_axis = 10;
  int mc_panels = 1;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

Eigen::MatrixXd haar_orthogonal_sample(int N, Rng& rng);

struct McValue {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Haar average of |(Q S Q')_{j x j}|^{1/2}. j = 0 and j = N are exact.
McValue r_function(const Eigen::MatrixXd& S, int j, std::uint64_t samples,
                   std::uint64_t seed, unsigned threads = 1);

/// int_0^{pi/2} sqrt(1 - m sin^2 t) dt for m <= 1 (m may be negative).
double elliptic_e(double m);

/// R_1(diag(l1, l2)) = (2/pi) sqrt(l1) E(1 - l2/l1).
double r1_closed_form(double l1, double l2);

/// pi l1 E(y)/2 with y = (l1^2 - l2^2)/l1^2 squared inside E. Fails
/// R(l, l) = sqrt(l); reported next to the Monte-Carlo value only.
double r1_squared_ratio_form(double l1, double l2);

double f_integral_KN(const RotationParams& params, const KernelMoments& moments,
                     const RotationOptions& opts = {});

McValue f_integral_KNm1(const RotationParams& params, const KernelMoments& moments,
                        const RotationOptions& opts = {});

double f_integral_Km1N(const RotationParams& params, const KernelMoments& moments,
                       const RotationOptions& opts = {});

struct RotationTopTwo {
  int D = 0;
  double L_D = 0.0;
  double L_Dm1 = 0.0;
  double L_Dm1_se = 0.0;
  double F_KN = 0.0;
  double F_KNm1 = 0.0;
  double F_KNm1_se = 0.0;
  double F_Km1N = 0.0;
};

RotationTopTwo lkc_rotation_top_two(const RotationParams& params, const KernelMoments& moments,
                                    const DomainGeometry& geom,
                                    const RotationOptions& opts = {});

/// LkcVector of dimension D holding only L_{D-1}, L_D.
LkcVector rotation_lkc_vector(const RotationTopTwo& top);

/// Ordered-eigenvalue density of the GOE (diagonal variance 2, off-diagonal
/// variance 1). Raises UnorderedInput unless lambda is ascending.
double goe_pushforward_density(std::span<const double> lambda);

Eigen::MatrixXd sample_goe_matrix(int N, Rng& rng);

/// Ascending eigenvalues of one GOE draw.
std::vector<double> sample_goe_eigenvalues(int N, Rng& rng);

}  // namespace lkcfield

#endif  // LKCFIELD_ROTATION_SPACE_HPP

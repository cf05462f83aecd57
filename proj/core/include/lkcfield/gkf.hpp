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

#ifndef LKCFIELD_GKF_HPP
#define LKCFIELD_GKF_HPP

#include <map>
#include <string>
#include <vector>

#include "lkcfield/scale_space.hpp"

namespace lkcfield {

double gaussian_density(double x);

/// Upper tail P(Z >= x).
double gaussian_tail(double x);

/// Probabilists' Hermite polynomial for n >= 0; for n = -1 the Mills ratio
/// tail(x)/density(x).
double hermite(int n, double x);

/// (n choose j) omega_n / (omega_{n-j} omega_j).
double flag_coefficient(int n, int j);

/// Gaussian Minkowski functional M_j of [u, inf).
double gaussian_minkowski(int j, double u);

/// E{chi(A_u)} = sum_j (2 pi)^{-(j+1)/2} L_j H_{j-1}(u) e^{-u^2/2}.
double expected_ec(const LkcVector& lkcs, double u);

/// The same sum assembled as sum_j [j 0] (2 pi)^{-j/2} L_j M_j([u, inf)).
double expected_ec_kinematic(const LkcVector& lkcs, double u);

/// d/du E{chi(A_u)} = -density(u) sum_j (2 pi)^{-j/2} L_j H_j(u).
double expected_ec_derivative(const LkcVector& lkcs, double u);

/// Smallest u past which E{chi(A_u)} is strictly decreasing (-inf when it
/// decreases everywhere).
double monotone_onset(const LkcVector& lkcs);

/// Largest u at which E{chi(A_u)} changes sign (-inf when it never does).
double positivity_crossing(const LkcVector& lkcs);

/// Solves expected_ec(lkcs, u) = alpha on the decreasing tail. Raises
/// LevelNotAttainable when alpha is at or above the curve's value at the
/// monotone onset.
double threshold_for_level(const LkcVector& lkcs, double alpha);

struct EecCurve {
  std::vector<double> thresholds;
  std::vector<double> eec_values;
  LkcVector lkcs;
  std::map<std::string, std::string> metadata;
};

EecCurve eec_curve(const LkcVector& lkcs, const std::vector<double>& thresholds);

/// "start:stop:step", stop included when it falls on the grid.
std::vector<double> parse_grid(const std::string& spec);

}  // namespace lkcfield

#endif  // LKCFIELD_GKF_HPP

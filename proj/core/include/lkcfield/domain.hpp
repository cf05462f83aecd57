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

#ifndef LKCFIELD_DOMAIN_HPP
#define LKCFIELD_DOMAIN_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace lkcfield {

enum class ShapeTag { kRectangle, kBall, kCustom };

std::string_view shape_name(ShapeTag tag) noexcept;
ShapeTag parse_shape_name(std::string_view name);

/// Euclidean description of the search region T in R^N.
struct DomainGeometry {
  int dimension = 0;
  std::vector<double> euclid_lkcs;  // L^E_0 .. L^E_N
  double volume = 0.0;
  double boundary_measure = 0.0;
  /// int over the boundary of detr_m(C_t), m = 0 .. N-1.
  std::vector<double> boundary_curvature_integrals;
  ShapeTag shape = ShapeTag::kCustom;
  /// Side lengths for rectangles, {radius} for balls; empty for custom.
  std::vector<double> parameters;
};

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

DomainGeometry rectangle_geometry(const std::vector<double>& sides);
DomainGeometry ball_geometry(int N, double radius);

/// Raises InvariantViolation unless L^E_0 = 1, L^E_N = volume,
/// L^E_{N-1} = boundary/2 and the first curvature integral is the boundary
/// measure (all to 1e-12 relative).
void validate_geometry(const DomainGeometry& geom);

/// sum_j omega_{N-j} rho^{N-j} L^E_j.
double steiner_tube_volume(const DomainGeometry& geom, double rho);

struct McEstimate {
  double value = 0.0;
  double standard_error = 0.0;
  std::uint64_t samples = 0;
};

/// Hit-or-miss estimate of the volume of {x : dist(x, T) <= rho} from a
/// bounding box. Deterministic given the seed, for any thread count.
McEstimate tube_volume_estimate(const DomainGeometry& geom, double rho,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned threads = 1);

/// "rect:1,2" or "ball:N,r".
DomainGeometry parse_domain_spec(const std::string& spec);

}  // namespace lkcfield

#endif  // LKCFIELD_DOMAIN_HPP

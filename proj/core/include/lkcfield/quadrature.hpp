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

#ifndef LKCFIELD_QUADRATURE_HPP
#define LKCFIELD_QUADRATURE_HPP

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace lkcfield {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod on a finite interval. Throws
/// ErrorCode::kQuadratureNotConverged when the error estimate stays above
/// `abs_tol` after `max_depth` bisection levels.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol = 1e-10,
                                    unsigned max_depth = 15);

/// Largest r in [0, r_max] at which |f(r)| still exceeds `rel_floor` times
/// the peak of |f| on a uniform scan. Used to truncate rapidly decaying
/// radial integrands before handing them to the adaptive rule.
double effective_upper_limit(const std::function<double(double)>& f,
                             double r_max, double rel_floor = 1e-16,
                             std::size_t scan_points = 4096);

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  static GaussLegendreRule make(int n);
};

/// Composite Gauss-Legendre on [a, b] split into `panels` equal pieces.
double integrate_gauss_legendre(const std::function<double(double)>& f,
                                double a, double b, const GaussLegendreRule& rule,
                                int panels = 1);

/// Flattened tensor-product cubature over the ordered region
/// lo <= x_1 <= x_2 <= ... <= x_dim <= hi, built from nested
/// Gauss-Legendre bounds (x_{k+1} ranges over [x_k, hi]).
struct SimplexCubature {
  int dim = 0;
  std::vector<double> points;   // dim * size(), row-major
  std::vector<double> weights;

  std::size_t size() const noexcept { return weights.size(); }
  std::span<const double> point(std::size_t i) const noexcept {
    return {points.data() + i * static_cast<std::size_t>(dim),
            static_cast<std::size_t>(dim)};
  }
};

SimplexCubature ordered_simplex_cubature(int dim, double lo, double hi,
                                         int nodes_per_axis, int panels = 1);

double integrate_ordered_simplex(
    int dim, double lo, double hi,
    const std::function<double(std::span<const double>)>& f,
    int nodes_per_axis = 24, int panels = 2);

/// Tensor Gauss-Legendre over the box [lo, hi]^dim.
double integrate_box(int dim, double lo, double hi,
                     const std::function<double(std::span<const double>)>& f,
                     int nodes_per_axis = 24, int panels = 2);

}  // namespace lkcfield

#endif  // LKCFIELD_QUADRATURE_HPP

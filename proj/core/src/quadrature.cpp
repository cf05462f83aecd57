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

#include "lkcfield/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lkcfield/errors.hpp"

namespace lkcfield {

namespace {

std::string format_real(double v) {
  std::ostringstream os;
  os << std::setprecision(3) << v;
  return os.str();
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    unsigned max_depth) {
  using boost::math::quadrature::gauss_kronrod;
  if (a == b) return {};
  // Boost terminates on a relative criterion, so derive it from the L1 norm
  // of a one-shot estimate.
  double err = 0.0;
  double l1 = 0.0;
  gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &err, &l1);
  const double rel =
      std::max(abs_tol / std::max(l1, 1e-300), 4.0 * std::numeric_limits<double>::epsilon());
  const double value =
      gauss_kronrod<double, 31>::integrate(f, a, b, max_depth, rel, &err, &l1);
  if (!std::isfinite(value) || err > abs_tol) {
    raise(ErrorCode::kQuadratureNotConverged,
          "error estimate " + format_real(err) + " exceeds tolerance " + format_real(abs_tol));
  }
  return {value, err};
}

double effective_upper_limit(const std::function<double(double)>& f,
                             double r_max, double rel_floor,
                             std::size_t scan_points) {
  std::vector<double> mag(scan_points + 1);
  double peak = 0.0;
  for (std::size_t i = 0; i <= scan_points; ++i) {
    const double r = r_max * static_cast<double>(i) / static_cast<double>(scan_points);
    mag[i] = std::abs(f(r));
    peak = std::max(peak, mag[i]);
  }
  if (peak == 0.0) return 0.0;
  for (std::size_t i = scan_points + 1; i-- > 0;) {
    if (mag[i] > rel_floor * peak) {
      const std::size_t hi = std::min(i + 1, scan_points);
      return r_max * static_cast<double>(hi) / static_cast<double>(scan_points);
    }
  }
  return r_max;
}

GaussLegendreRule GaussLegendreRule::make(int n) {
  if (n < 1) raise(ErrorCode::kInvalidArgument, "Gauss-Legendre order must be >= 1");
  GaussLegendreRule rule;
  if (n == 1) {
    rule.nodes = {0.0};
    rule.weights = {2.0};
    return rule;
  }
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const int m = (n + 1) / 2;
  for (int i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = -x;
    rule.nodes[hi] = x;
    rule.weights[lo] = w;
    rule.weights[hi] = w;
  }
  return rule;
}

double integrate_gauss_legendre(const std::function<double(double)>& f,
                                double a, double b, const GaussLegendreRule& rule,
                                int panels) {
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double half = 0.5 * width;
    const double mid = lo + half;
    double sum = 0.0;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      sum += rule.weights[k] * f(mid + half * rule.nodes[k]);
    }
    total += half * sum;
  }
  return total;
}

namespace {

// 1-D composite rule on [a, b] as explicit (node, weight) pairs.
void composite_nodes(double a, double b, const GaussLegendreRule& rule, int panels,
                     std::vector<double>& x, std::vector<double>& w) {
  x.clear();
  w.clear();
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double half = 0.5 * width;
    const double mid = a + p * width + half;
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
      x.push_back(mid + half * rule.nodes[k]);
      w.push_back(half * rule.weights[k]);
    }
  }
}

void simplex_recurse(int depth, int dim, double lower, double hi,
                     const GaussLegendreRule& rule, int panels,
                     std::vector<double>& prefix, double weight,
                     SimplexCubature& out) {
  if (depth == dim) {
    out.points.insert(out.points.end(), prefix.begin(), prefix.end());
    out.weights.push_back(weight);
    return;
  }
  std::vector<double> x;
  std::vector<double> w;
  composite_nodes(lower, hi, rule, panels, x, w);
  for (std::size_t k = 0; k < x.size(); ++k) {
    prefix[static_cast<std::size_t>(depth)] = x[k];
    simplex_recurse(depth + 1, dim, x[k], hi, rule, panels, prefix, weight * w[k], out);
  }
}

}  // namespace

SimplexCubature ordered_simplex_cubature(int dim, double lo, double hi,
                                         int nodes_per_axis, int panels) {
  if (dim < 0) raise(ErrorCode::kInvalidArgument, "simplex dimension must be >= 0");
  SimplexCubature out;
  out.dim = dim;
  if (dim == 0) {
    out.weights.push_back(1.0);
    return out;
  }
  if (hi <= lo) return out;
  const auto rule = GaussLegendreRule::make(nodes_per_axis);
  std::vector<double> prefix(static_cast<std::size_t>(dim));
  simplex_recurse(0, dim, lo, hi, rule, panels, prefix, 1.0, out);
  return out;
}

double integrate_ordered_simplex(
    int dim, double lo, double hi,
    const std::function<double(std::span<const double>)>& f, int nodes_per_axis,
    int panels) {
  const auto cub = ordered_simplex_cubature(dim, lo, hi, nodes_per_axis, panels);
  double total = 0.0;
  for (std::size_t i = 0; i < cub.size(); ++i) total += cub.weights[i] * f(cub.point(i));
  return total;
}

double integrate_box(int dim, double lo, double hi,
                     const std::function<double(std::span<const double>)>& f,
                     int nodes_per_axis, int panels) {
  if (dim < 0) raise(ErrorCode::kInvalidArgument, "box dimension must be >= 0");
  const auto rule = GaussLegendreRule::make(nodes_per_axis);
  std::vector<double> x;
  std::vector<double> w;
  composite_nodes(lo, hi, rule, panels, x, w);
  const std::size_t m = x.size();
  std::vector<std::size_t> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> point(static_cast<std::size_t>(dim));
  double total = 0.0;
  while (true) {
    double weight = 1.0;
    for (int d = 0; d < dim; ++d) {
      point[static_cast<std::size_t>(d)] = x[idx[static_cast<std::size_t>(d)]];
      weight *= w[idx[static_cast<std::size_t>(d)]];
    }
    total += weight * f(point);
    int d = 0;
    for (; d < dim; ++d) {
      if (++idx[static_cast<std::size_t>(d)] < m) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d == dim) break;
  }
  return total;
}

}  // namespace lkcfield

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

// Reference computations used as test oracles. Everything here is written
// independently of the library code paths it checks: tensor-product
// integration in Cartesian coordinates, the direct geometry of the N = 1
// scale space, scalar bisection, and closed forms.

#ifndef LKCFIELD_TESTS_ORACLES_HPP
#define LKCFIELD_TESTS_ORACLES_HPP

#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

inline constexpr double kPi = std::numbers::pi;

/// Composite Simpson rule with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n = 2000) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  return s * h / 3.0;
}

/// Simpson in every coordinate over [-R, R]^dim.
inline double cube_simpson(int dim, double R, int n,
                           const std::function<double(const std::vector<double>&)>& f) {
  const double h = 2.0 * R / n;
  std::vector<int> idx(static_cast<std::size_t>(dim), 0);
  std::vector<double> x(static_cast<std::size_t>(dim));
  double total = 0.0;
  while (true) {
    double w = 1.0;
    for (int d = 0; d < dim; ++d) {
      const int i = idx[static_cast<std::size_t>(d)];
      x[static_cast<std::size_t>(d)] = -R + i * h;
      w *= (i == 0 || i == n) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    }
    total += w * f(x);
    int d = 0;
    for (; d < dim; ++d) {
      if (++idx[static_cast<std::size_t>(d)] <= n) break;
      idx[static_cast<std::size_t>(d)] = 0;
    }
    if (d == dim) break;
  }
  return total * std::pow(h / 3.0, dim);
}

inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fm = f(mid);
    if ((fm > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

inline double normal_tail(double u) { return 0.5 * std::erfc(u / std::sqrt(2.0)); }

/// LKCs of [0, T] x [s1, s2] under g = gamma e^{2s} dt^2 + kappa ds^2 (the
/// N = 1 scale space in s = -ln sigma): area, half perimeter, and chi.
struct ScaleRect1D {
  double L0, L1, L2;
};

inline ScaleRect1D scale_rect_1d(double gamma, double kappa, double T, double sigma1, double sigma2) {
  const double s1 = -std::log(sigma2);
  const double s2 = -std::log(sigma1);
  const double area = simpson([&](double s) { return std::sqrt(gamma * kappa) * std::exp(s) * T; }, s1, s2);
  const double sides = 2.0 * std::sqrt(kappa) * (s2 - s1);
  const double caps = std::sqrt(gamma) * T * (std::exp(s1) + std::exp(s2));
  return {1.0, 0.5 * (sides + caps), area};
}

/// (2/pi) int_0^{pi/2} sqrt(l1 cos^2 + l2 sin^2), by Simpson.
inline double r1_direct(double l1, double l2) {
  return 2.0 / kPi *
         simpson([&](double t) { return std::sqrt(l1 * std::cos(t) * std::cos(t) + l2 * std::sin(t) * std::sin(t)); },
                 0.0, kPi / 2.0, 400);
}

}  // namespace oracle

#endif  // LKCFIELD_TESTS_ORACLES_HPP

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

#include "lkcfield/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "lkcfield/errors.hpp"
#include "lkcfield/quadrature.hpp"

namespace lkcfield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kKappa4Tol = 1e-7;
constexpr double kKappaTol = 1e-6;

void check_dimension(int N) {
  if (N < 1) raise(ErrorCode::kUnsupportedDimension, "dimension must be >= 1");
}

}  // namespace

RadialKernel make_gaussian_kernel(int N) {
  check_dimension(N);
  const double amp = std::pow(kPi, -N / 4.0);
  RadialKernel k;
  k.name = "gaussian";
  k.dimension = N;
  k.profile = [amp](double x) { return amp * std::exp(-0.5 * x); };
  k.derivative = [amp](double x) { return -0.5 * amp * std::exp(-0.5 * x); };
  k.support_radius = 14.0;
  return k;
}

RadialKernel make_marr_kernel(int N) {
  check_dimension(N);
  const double n = N;
  const double amp = std::sqrt(4.0 * n / ((n + 2.0) * std::pow(kPi, n / 2.0)));
  RadialKernel k;
  k.name = "marr";
  k.dimension = N;
  k.profile = [amp, n](double x) { return amp * (1.0 - x / n) * std::exp(-0.5 * x); };
  k.derivative = [amp, n](double x) {
    return -amp * std::exp(-0.5 * x) * (1.0 / n + 0.5 - x / (2.0 * n));
  };
  k.support_radius = 14.0;
  return k;
}

RadialKernel make_custom_kernel(std::string name, int N,
                                std::function<double(double)> profile,
                                std::function<double(double)> derivative,
                                double support_radius, double norm_tol) {
  check_dimension(N);
  if (!(support_radius > 0.0)) {
    raise(ErrorCode::kInvalidArgument, "support radius must be positive");
  }
  RadialKernel k{std::move(name), N, std::move(profile), std::move(derivative),
                 support_radius};
  const double norm = kernel_norm(k);
  if (std::abs(norm - 1.0) > norm_tol) {
    raise(ErrorCode::kInvariantViolation,
          "kernel '" + k.name + "' has L2 norm " + std::to_string(norm));
  }
  const double xmax = support_radius * support_radius;
  double scale = 0.0;
  for (int i = 0; i <= 64; ++i) scale = std::max(scale, std::abs(k.derivative(xmax * i / 64.0)));
  for (int i = 1; i < 64; ++i) {
    const double x = xmax * i / 64.0;
    const double h = 1e-5 * std::max(1.0, x);
    const double fd = (k.profile(x + h) - k.profile(x - h)) / (2.0 * h);
    if (std::abs(fd - k.derivative(x)) > 1e-5 * (1.0 + scale)) {
      raise(ErrorCode::kInvariantViolation,
            "derivative of kernel '" + k.name + "' disagrees with finite difference at x=" +
                std::to_string(x));
    }
  }
  return k;
}

RadialKernel make_named_kernel(const std::string& name, int N) {
  if (name == "gaussian") return make_gaussian_kernel(N);
  if (name == "marr") return make_marr_kernel(N);
  raise(ErrorCode::kConfigInvalid, "unknown kernel '" + name + "'");
}

double sphere_moment(int a, int b, int N) {
  if (a < 0 || b < 0 || N < 1) raise(ErrorCode::kInvalidArgument, "invalid sphere moment");
  if (a % 2 != 0 || b % 2 != 0) return 0.0;
  const double lg = std::lgamma((a + 1) / 2.0) + std::lgamma((b + 1) / 2.0) +
                    (N - 2) * std::lgamma(0.5) - std::lgamma((N + a + b) / 2.0);
  return 2.0 * std::exp(lg);
}

double radial_moment(const std::function<double(double)>& g, int a, int b, int N,
                     double support_radius, const QuadratureOptions& opts) {
  const double s = sphere_moment(a, b, N);
  if (s == 0.0) return 0.0;
  const int p = N - 1 + a + b;
  auto integrand = [&](double r) { return g(r * r) * std::pow(r, p); };
  const double upper = effective_upper_limit(integrand, support_radius);
  if (upper == 0.0) return 0.0;
  return s * integrate_adaptive(integrand, 0.0, upper, opts.abs_tol, opts.max_depth).value;
}

double kernel_norm(const RadialKernel& kernel, const QuadratureOptions& opts) {
  auto g = [&](double x) {
    const double v = kernel.profile(x);
    return v * v;
  };
  return radial_moment(g, 0, 0, kernel.dimension, kernel.support_radius, opts);
}

double kappa_direct(const RadialKernel& kernel, const QuadratureOptions& opts) {
  const double n = kernel.dimension;
  auto g = [&](double x) {
    const double v = 2.0 * x * kernel.derivative(x) + 0.5 * n * kernel.profile(x);
    return v * v;
  };
  return radial_moment(g, 0, 0, kernel.dimension, kernel.support_radius, opts);
}

double ctilde_squared(int N, double rho, double kappa22) {
  const double n = N;
  return n * n * (1.0 / 16.0 + rho / 2.0 + kappa22) + 2.0 * n * kappa22;
}

void complete_moments(KernelMoments& m) {
  check_dimension(m.N);
  const double n = m.N;
  const double a = 1.0 / 16.0 + m.rho / 2.0 + m.kappa22;
  const double ct2 = ctilde_squared(m.N, m.rho, m.kappa22);
  if (!(ct2 > 0.0) || !(m.kappa22 > 0.0)) {
    raise(ErrorCode::kInvariantViolation, "kernel constants are not positive");
  }
  m.ctilde = std::sqrt(ct2);
  m.kappa = 4.0 * ct2;

  const double K = n * (n + 1.0) / 2.0;
  const double D = n + K;
  const double two_k22 = 2.0 * m.kappa22;
  m.c_small = std::sqrt(std::pow(two_k22, K) * (1.0 + n * a / two_k22));
  double log_gamma_ratio = 0.0;
  for (int j = 1; j <= m.N; ++j) log_gamma_ratio += std::lgamma(0.5) - std::lgamma(j / 2.0);
  m.c_big = std::pow(2.0 * kPi, D / 2.0 - n) * std::exp(log_gamma_ratio) * m.c_small;
  // C~^2_{N}/N over C~^2_{N-1}/(N-1), both with the N-dimensional moments.
  m.d_big = std::sqrt(two_k22 * (two_k22 + n * a) / (two_k22 + (n - 1.0) * a));
}

KernelMoments compute_moments(const RadialKernel& kernel, const QuadratureOptions& opts) {
  const int N = kernel.dimension;
  check_dimension(N);
  const double R = kernel.support_radius;
  auto kd2 = [&](double x) {
    const double v = kernel.derivative(x);
    return v * v;
  };
  auto kkd = [&](double x) { return kernel.profile(x) * kernel.derivative(x); };

  KernelMoments m;
  m.kernel = kernel.name;
  m.N = N;
  m.norm = kernel_norm(kernel, opts);
  // grad h = 2 k'(|u|^2) u, so E(d_1 f)^2 = 4 int k'^2 u_1^2.
  m.gamma = 4.0 * radial_moment(kd2, 2, 0, N, R, opts);
  m.kappa22 = radial_moment(kd2, 2, 2, N, R, opts);
  m.kappa4 = radial_moment(kd2, 4, 0, N, R, opts);
  m.rho = radial_moment(kkd, 2, 0, N, R, opts);
  complete_moments(m);

  m.kappa_direct = kappa_direct(kernel, opts);
  m.kappa4_residual = m.kappa4 - 3.0 * m.kappa22;
  m.kappa_residual = m.kappa_direct - m.kappa;
  if (std::abs(m.kappa4_residual) > kKappa4Tol) {
    raise(ErrorCode::kInvariantViolation,
          "kappa4 - 3 kappa22 = " + std::to_string(m.kappa4_residual));
  }
  if (std::abs(m.kappa_residual) > kKappaTol) {
    raise(ErrorCode::kInvariantViolation,
          "kappa routes disagree by " + std::to_string(m.kappa_residual));
  }
  if (std::abs(m.norm - 1.0) > 1e-8) {
    raise(ErrorCode::kInvariantViolation, "kernel L2 norm " + std::to_string(m.norm));
  }
  return m;
}

}  // namespace lkcfield

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

#ifndef LKCFIELD_KERNEL_HPP
#define LKCFIELD_KERNEL_HPP

#include <functional>
#include <string>

namespace lkcfield {

/// Spherically symmetric filter h(u) = k(|u|^2) on R^N.
struct RadialKernel {
  std::string name;
  int dimension = 0;
  std::function<double(double)> profile;     // k(x), x = |u|^2
  std::function<double(double)> derivative;  // dk/dx
  /// Radial integrals are taken over [0, support_radius]; for kernels with
  /// Gaussian decay this is a cutoff well past the 1e-16 level.
  double support_radius = 0.0;

  double operator()(double x) const { return profile(x); }
};

struct QuadratureOptions {
  double abs_tol = 1e-10;
  unsigned max_depth = 15;
};

RadialKernel make_gaussian_kernel(int N);
RadialKernel make_marr_kernel(int N);

/// Wraps user callables. The L2 norm and the derivative are checked (the
/// profile is never rescaled); failures raise InvariantViolation.
RadialKernel make_custom_kernel(std::string name, int N,
                                std::function<double(double)> profile,
                                std::function<double(double)> derivative,
                                double support_radius, double norm_tol = 1e-8);

/// Looks up "gaussian" or "marr".
RadialKernel make_named_kernel(const std::string& name, int N);

/// Angular moment of the unit sphere: int_{S^{N-1}} v_1^a v_2^b dv, continued
/// through Gamma functions to N = 1.
double sphere_moment(int a, int b, int N);

/// int_{R^N} g(|u|^2) u_1^a u_2^b du via the radial reduction.
double radial_moment(const std::function<double(double)>& g, int a, int b, int N,
                     double support_radius, const QuadratureOptions& opts = {});

/// int h^2 du.
double kernel_norm(const RadialKernel& kernel, const QuadratureOptions& opts = {});

struct KernelMoments {
  std::string kernel;
  int N = 0;
  double gamma = 0.0;
  double kappa = 0.0;
  double kappa22 = 0.0;
  double kappa4 = 0.0;
  double rho = 0.0;
  double ctilde = 0.0;
  double c_small = 0.0;
  double c_big = 0.0;
  double d_big = 0.0;

  // Diagnostics kept alongside the constants.
  double norm = 1.0;
  double kappa_direct = 0.0;
  double kappa4_residual = 0.0;   // kappa4 - 3 kappa22
  double kappa_residual = 0.0;    // kappa_direct - 4 ctilde^2
};

/// N^2 (1/16 + rho/2 + kappa22) + 2 N kappa22.
double ctilde_squared(int N, double rho, double kappa22);

/// Fills the derived constants (ctilde, c_small, c_big, d_big, kappa) from
/// gamma, kappa22, kappa4, rho and N already present in `m`.
void complete_moments(KernelMoments& m);

/// Evaluates every constant by radial quadrature and checks the kernel
/// identities. Raises InvariantViolation when kappa4 - 3 kappa22 exceeds
/// 1e-7 or the two kappa routes differ by more than 1e-6.
KernelMoments compute_moments(const RadialKernel& kernel,
                              const QuadratureOptions& opts = {});

/// int (<u, grad h(u)> + N h(u) / 2)^2 du.
double kappa_direct(const RadialKernel& kernel, const QuadratureOptions& opts = {});

}  // namespace lkcfield

#endif  // LKCFIELD_KERNEL_HPP

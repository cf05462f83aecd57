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


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "lkcfield/errors.hpp"
#include "lkcfield/kernel.hpp"
#include "oracles.hpp"

namespace lkcfield {
namespace {

struct CartesianMoments {
  double norm, gamma, kappa22, kappa4, rho, kappa;
};

// Integrates the defining expressions on a Cartesian grid in R^N, without
// the radial reduction the library uses.
CartesianMoments cartesian_moments(const RadialKernel& k, int N) {
  const int n = N == 1 ? 4000 : (N == 2 ? 400 : 100);
  const double R = 9.0;
  auto integral = [&](auto integrand) {
    return oracle::cube_simpson(N, R, n, [&](const std::vector<double>& u) {
      double x = 0.0;
      for (double v : u) x += v * v;
      return integrand(u, x, k.profile(x), k.derivative(x));
    });
  };
  CartesianMoments m{};
  m.norm = integral([](auto&, double, double p, double) { return p * p; });
  m.gamma = integral([](auto& u, double, double, double d) { return 4.0 * d * d * u[0] * u[0]; });
  m.kappa4 = integral([](auto& u, double, double, double d) { return d * d * std::pow(u[0], 4); });
  m.rho = integral([](auto& u, double, double p, double d) { return p * d * u[0] * u[0]; });
  m.kappa = integral([N](auto&, double x, double p, double d) {
    const double t = 2.0 * x * d + 0.5 * N * p;
    return t * t;
  });
  m.kappa22 = N >= 2 ? integral([](auto& u, double, double, double d) {
    return d * d * u[0] * u[0] * u[1] * u[1];
  })
                     : m.kappa4 / 3.0;
  return m;
}

class KernelByDimension : public ::testing::TestWithParam<std::tuple<std::string, int>> {};

TEST_P(KernelByDimension, RadialReductionMatchesCartesianGrid) {
  const auto [name, N] = GetParam();
  const auto k = make_named_kernel(name, N);
  const auto m = compute_moments(k);
  const auto o = cartesian_moments(k, N);
  EXPECT_NEAR(m.norm, o.norm, 1e-9);
  EXPECT_NEAR(m.gamma, o.gamma, 1e-9);
  EXPECT_NEAR(m.kappa4, o.kappa4, 1e-9);
  EXPECT_NEAR(m.kappa22, o.kappa22, 1e-9);
  EXPECT_NEAR(m.rho, o.rho, 1e-9);
  EXPECT_NEAR(m.kappa, o.kappa, 1e-8);
  EXPECT_NEAR(m.kappa_direct, o.kappa, 1e-8);
}

TEST_P(KernelByDimension, GammaClosedForms) {
  const auto [name, N] = GetParam();
  const auto m = compute_moments(make_named_kernel(name, N));
  const double expected = name == "gaussian" ? 0.5 : (N + 4.0) / (2.0 * N);
  EXPECT_NEAR(m.gamma, expected, 1e-10);
}

TEST_P(KernelByDimension, FourthMomentIdentity) {
  const auto [name, N] = GetParam();
  const auto m = compute_moments(make_named_kernel(name, N));
  EXPECT_NEAR(m.kappa4 - 3.0 * m.kappa22, 0.0, 1e-12);
  EXPECT_NEAR(m.kappa4_residual, 0.0, 1e-12);
}

INSTANTIATE_TEST_SUITE_P(All, KernelByDimension,
                         ::testing::Combine(::testing::Values("gaussian", "marr"),
                                            ::testing::Values(1, 2, 3)));

TEST(GaussianKernel, ClosedFormMoments) {
  for (int N = 1; N <= 3; ++N) {
    const auto m = compute_moments(make_gaussian_kernel(N));
    EXPECT_NEAR(m.kappa22, 1.0 / 16.0, 1e-12);
    EXPECT_NEAR(m.rho, -0.25, 1e-12);
    EXPECT_NEAR(1.0 / 16.0 + m.rho / 2.0 + m.kappa22, 0.0, 1e-12);
    EXPECT_NEAR(m.kappa, N / 2.0, 1e-10);
  }
}

TEST(KernelMoments, BigConstantsAtN1) {
  for (const char* name : {"gaussian", "marr"}) {
    const auto m = compute_moments(make_named_kernel(name, 1));
    EXPECT_NEAR(m.c_big, m.ctilde, 1e-10) << name;
    EXPECT_NEAR(m.d_big, m.c_big, 1e-10) << name;
  }
}

TEST(SphereMoment, MatchesSurfaceAreaAndCircleIntegrals) {
  EXPECT_NEAR(sphere_moment(0, 0, 2), 2.0 * oracle::kPi, 1e-13);
  EXPECT_NEAR(sphere_moment(0, 0, 3), 4.0 * oracle::kPi, 1e-13);
  const double cos2 = oracle::simpson([](double t) { return std::pow(std::cos(t), 2); }, 0, 2 * oracle::kPi, 400);
  EXPECT_NEAR(sphere_moment(2, 0, 2), cos2, 1e-12);
  const double c2s2 = oracle::simpson(
      [](double t) { return std::pow(std::cos(t) * std::sin(t), 2); }, 0, 2 * oracle::kPi, 400);
  EXPECT_NEAR(sphere_moment(2, 2, 2), c2s2, 1e-12);
  EXPECT_EQ(sphere_moment(1, 2, 3), 0.0);
}

TEST(CustomKernel, RandomizedProfileSatisfiesIdentity) {
  // k(x) = A (1 + b x + c x^2) exp(-a x / 2), normalized numerically.
  const double a = 0.83, b = -0.37, c = 0.051;
  for (int N = 1; N <= 3; ++N) {
    auto shape = [=](double x) { return (1.0 + b * x + c * x * x) * std::exp(-0.5 * a * x); };
    const double sq = std::sqrt(radial_moment([&](double x) { return shape(x) * shape(x); }, 0, 0, N, 20.0));
    auto profile = [=](double x) { return shape(x) / sq; };
    auto deriv = [=](double x) {
      return ((b + 2 * c * x) - 0.5 * a * (1 + b * x + c * x * x)) * std::exp(-0.5 * a * x) / sq;
    };
    const auto k = make_custom_kernel("poly", N, profile, deriv, 20.0);
    const auto m = compute_moments(k);
    EXPECT_NEAR(m.kappa4_residual, 0.0, 1e-10);
    EXPECT_NEAR(m.kappa_residual, 0.0, 1e-8);
  }
}

TEST(CustomKernel, RejectsUnnormalizedProfile) {
  try {
    make_custom_kernel("bad", 1, [](double x) { return std::exp(-x); },
                       [](double x) { return -std::exp(-x); }, 14.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
  }
}

TEST(CustomKernel, RejectsWrongDerivative) {
  const auto g = make_gaussian_kernel(2);
  try {
    make_custom_kernel("bad", 2, g.profile, [](double) { return 0.0; }, 14.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
  }
}

TEST(NamedKernel, UnknownNameIsConfigError) {
  try {
    make_named_kernel("cauchy", 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigInvalid);
  }
}

}  // namespace
}  // namespace lkcfield

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


#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/quadrature.hpp"
#include "lkcfield/random.hpp"
#include "lkcfield/rotation_space.hpp"
#include "lkcfield/scale_space.hpp"
#include "oracles.hpp"

namespace lkcfield {
namespace {

using oracle::kPi;

Eigen::MatrixXd random_spd(int N, std::uint64_t seed) {
  Rng rng = substream(seed, 0, 99);
  std::normal_distribution<double> z;
  Eigen::MatrixXd A(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) A(i, j) = z(rng);
  return A * A.transpose() + Eigen::MatrixXd::Identity(N, N);
}

TEST(Haar, Orthogonal) {
  Rng rng = substream(1, 0);
  for (int N = 1; N <= 4; ++N) {
    const auto Q = haar_orthogonal_sample(N, rng);
    EXPECT_LE((Q.transpose() * Q - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(Haar, SignsAndFirstEntryMoments) {
  Rng rng = substream(2, 0);
  const int n = 100000;
  int plus = 0;
  for (int i = 0; i < n; ++i) plus += haar_orthogonal_sample(1, rng)(0, 0) > 0 ? 1 : 0;
  EXPECT_NEAR(plus / double(n), 0.5, 3.0 * 0.5 / std::sqrt(n));
  double s = 0.0, s2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const double q = haar_orthogonal_sample(2, rng)(0, 0);
    s += q * q;
    s2 += q * q * q * q;
  }
  const double mean = s / n;
  const double se = std::sqrt((s2 / n - mean * mean) / n);
  EXPECT_NEAR(mean, 0.5, 3.0 * se);
}

TEST(RFunction, TrivialOrders) {
  const auto S = random_spd(3, 5);
  EXPECT_DOUBLE_EQ(r_function(S, 0, 100, 1).value, 1.0);
  EXPECT_NEAR(r_function(S, 3, 100, 1).value, std::sqrt(S.determinant()), 1e-12);
}

TEST(RFunction, ConjugationInvariant) {
  const auto S = random_spd(3, 6);
  Rng rng = substream(7, 0);
  const auto Q = haar_orthogonal_sample(3, rng);
  const Eigen::MatrixXd S2 = Q * S * Q.transpose();
  for (int j : {1, 2}) {
    const auto a = r_function(S, j, 40000, 11);
    const auto b = r_function(S2, j, 40000, 12);
    const double se = std::hypot(a.standard_error, b.standard_error);
    EXPECT_NEAR(a.value, b.value, 4.0 * se) << j;
  }
}

TEST(RFunction, ThreadCountInvariant) {
  const auto S = random_spd(3, 8);
  EXPECT_EQ(r_function(S, 1, 20000, 3, 1).value, r_function(S, 1, 20000, 3, 4).value);
}

TEST(Elliptic, MatchesSimpson) {
  for (double m : {-3.0, -0.5, 0.0, 0.3, 0.9}) {
    const double direct = oracle::simpson(
        [m](double t) { return std::sqrt(1.0 - m * std::sin(t) * std::sin(t)); }, 0.0, kPi / 2.0, 400);
    EXPECT_NEAR(elliptic_e(m), direct, 1e-12) << m;
  }
}

TEST(R1, ClosedFormMatchesAngleIntegral) {
  for (auto [l1, l2] : {std::pair{1.0, 1.0}, {4.0, 1.0}, {1.0, 4.0}, {2.5, 0.3}}) {
    EXPECT_NEAR(r1_closed_form(l1, l2), oracle::r1_direct(l1, l2), 1e-12);
  }
  EXPECT_NEAR(r1_closed_form(3.0, 3.0), std::sqrt(3.0), 1e-14);
}

TEST(R1, ClosedFormMatchesHaarMonteCarlo) {
  Eigen::MatrixXd S = Eigen::Vector2d(0.25, 1.0).asDiagonal();
  const auto mc = r_function(S, 1, 50000, 21);
  EXPECT_NEAR(mc.value, r1_closed_form(0.25, 1.0), 4.0 * mc.standard_error);
  // The squared-ratio form fails the equal-eigenvalue check sqrt(lambda).
  EXPECT_GT(std::abs(r1_squared_ratio_form(1.0, 1.0) - 1.0), 0.5);
}

TEST(Simplex, SymmetrizedBoxEqualsOrderedIntegral) {
  const double lo = 0.25, hi = 1.0;
  // Squared Vandermonde keeps the symmetrized integrand smooth on the box.
  auto smooth = [](std::span<const double> l) {
    return (l[1] - l[0]) * (l[1] - l[0]) * std::pow(l[0] * l[1], -1.0);
  };
  const double ordered_sq = integrate_ordered_simplex(2, lo, hi, smooth, 24, 2);
  const double box = integrate_box(2, lo, hi, smooth, 24, 2);
  EXPECT_NEAR(ordered_sq, box / 2.0, 1e-11 * ordered_sq);
  auto f = [](std::span<const double> l) {
    return std::abs(l[1] - l[0]) * std::pow(l[0] * l[1], -1.0);
  };
  const double ordered = integrate_ordered_simplex(2, lo, hi, f, 24, 2);
  const double nested = oracle::simpson(
      [&](double a) {
        return oracle::simpson([&](double b) { return (b - a) / (a * b); }, a, hi, 400);
      },
      lo, hi, 2000);
  EXPECT_NEAR(ordered, nested, 1e-10);
}

TEST(Rotation1D, ReducesToScaleSpace) {
  for (const char* name : {"gaussian", "marr"}) {
    const auto m = compute_moments(make_named_kernel(name, 1));
    const RotationParams p{1, 0.5, 2.0};
    RotationOptions opts;
    opts.seed = 3;
    EXPECT_NEAR(f_integral_KN(p, m, opts), m.ctilde * 2.0 * (2.0 - 0.5), 1e-8);
    EXPECT_NEAR(f_integral_KNm1(p, m, opts).value, m.ctilde * 2.0 * std::log(4.0), 1e-8);
    EXPECT_NEAR(f_integral_Km1N(p, m, opts), 2.0 + 0.5, 1e-12);
    const auto g = rectangle_geometry({10.0});
    const auto rot = lkc_rotation_top_two(p, m, g, opts);
    const auto sc = scale_top_two(m, g, ScaleRange{0.5, 2.0});
    EXPECT_NEAR(rot.L_D, sc.top, 1e-8);
    EXPECT_NEAR(rot.L_Dm1, sc.second, 1e-8);
  }
}

double l5_closed(double s1, double s2, double area) {
  const double r = s1 / s2;
  return std::pow(2.0, -4) * kPi / (s1 * s1) * area * (r * r - 1.0 - (r * r + 1.0) * std::log(r));
}

TEST(Rotation2D, VolumeMatchesClosedForm) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  const auto g = rectangle_geometry({1.0, 1.0});
  for (auto [a, b] : {std::pair{1.0, 2.0}, {0.5, 1.0}, {1.0, 4.0}}) {
    const auto t = lkc_rotation_top_two(RotationParams{2, a, b}, m, g);
    const double want = l5_closed(a, b, 1.0);
    EXPECT_NEAR(t.L_D, want, 1e-3 * want);
  }
  EXPECT_NEAR(l5_closed(1.0, 2.0, 1.0), 0.022862, 1e-6);
}

TEST(Rotation2D, FaceTermMatchesClosedForm) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  for (auto [a, b] : {std::pair{1.0, 2.0}, {0.5, 1.0}, {1.0, 4.0}}) {
    const double F = f_integral_Km1N(RotationParams{2, a, b}, m);
    const double r = a / b;
    const double want = std::pow(2.0, -3.5) * kPi / (a * a) * (r * r - 1.0) * std::log(r);
    EXPECT_NEAR(0.5 * m.gamma * F, want, 1e-8 * want);
    EXPECT_GE(F, 0.0);
  }
}

// Boundary term of L_{D-1}: half of gamma^{1/2} |dT| C I, with C = pi/16 for
// the Gaussian at N = 2 and I the double integral of
// (l2 - l1)(l1 l2)^{-3/2} R(l1, l2), R evaluated by angle quadrature.
TEST(Rotation2D, BoundaryTermMatchesDoubleIntegral) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  for (auto [a, b] : {std::pair{1.0, 2.0}, {0.5, 1.0}}) {
    const RotationParams p{2, a, b};
    const double lo = p.lam_lo(), hi = p.lam_hi();
    const double I = oracle::simpson(
        [&](double l1) {
          return oracle::simpson(
              [&](double l2) { return (l2 - l1) * std::pow(l1 * l2, -1.5) * oracle::r1_direct(l2, l1); }, l1, hi,
              200);
        },
        lo, hi, 200);
    const double perimeter = 4.0;
    const double want = 0.5 * std::sqrt(0.5) * perimeter * (kPi / 16.0) * I;
    const auto t = lkc_rotation_top_two(p, m, rectangle_geometry({1.0, 1.0}));
    const double got = t.L_Dm1 - 0.5 * m.gamma * t.F_Km1N;
    EXPECT_NEAR(got, want, 1e-7 * want);
    // A 2^{-9/2} pi |dT| coefficient would be twice the assembled one.
    EXPECT_NEAR(got / (std::pow(2.0, -4.5) * kPi * perimeter * I), 0.5, 1e-7);
  }
}

TEST(Rotation3D, MonteCarloBoundaryTermIsFiniteWithError) {
  const auto m = compute_moments(make_gaussian_kernel(3));
  RotationOptions opts;
  opts.r_samples = 2000;
  opts.seed = 5;
  const auto v = f_integral_KNm1(RotationParams{3, 1.0, 2.0}, m, opts);
  EXPECT_TRUE(std::isfinite(v.value));
  EXPECT_GT(v.value, 0.0);
  EXPECT_GT(v.standard_error, 0.0);
  EXPECT_LT(v.standard_error, 0.05 * v.value);
}

TEST(Rotation, DegenerateRangeGivesZero) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  const RotationParams p{2, 1.0, 1.0};
  EXPECT_EQ(f_integral_KN(p, m), 0.0);
  EXPECT_EQ(f_integral_Km1N(p, m), 0.0);
  EXPECT_EQ(f_integral_KNm1(p, m).value, 0.0);
}

TEST(Rotation, VectorIsTruncatedBelowSecond) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  const auto t = lkc_rotation_top_two(RotationParams{2, 1.0, 2.0}, m, rectangle_geometry({1.0, 1.0}));
  const auto v = rotation_lkc_vector(t);
  EXPECT_EQ(v.dim, 5);
  EXPECT_TRUE(v.truncated);
  EXPECT_EQ(v.lowest_valid, 4);
  EXPECT_DOUBLE_EQ(v.values[5], t.L_D);
}

TEST(Goe, OneDimensionalDensity) {
  for (double x : {-2.0, 0.0, 1.3}) {
    const double l[1] = {x};
    EXPECT_NEAR(goe_pushforward_density(l), std::exp(-x * x / 4.0) / std::sqrt(4.0 * kPi), 1e-14);
  }
}

TEST(Goe, TwoDimensionalDensityIntegratesToOne) {
  const double total = oracle::simpson(
      [](double a) {
        return oracle::simpson(
            [a](double b) {
              const double l[2] = {a, b};
              return goe_pushforward_density(l);
            },
            a, 14.0, 400);
      },
      -14.0, 14.0, 400);
  EXPECT_NEAR(total, 1.0, 1e-6);
}

TEST(Goe, UnorderedInputRejected) {
  const double l[2] = {1.0, 0.0};
  try {
    goe_pushforward_density(l);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnorderedInput);
  }
}

TEST(Goe, EntryVariances) {
  Rng rng = substream(9, 0);
  const int n = 40000;
  double d = 0.0, o = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto M = sample_goe_matrix(2, rng);
    d += M(0, 0) * M(0, 0);
    o += M(0, 1) * M(0, 1);
    EXPECT_EQ(M(0, 1), M(1, 0));
  }
  EXPECT_NEAR(d / n, 2.0, 4.0 * 2.0 * std::sqrt(2.0 / n));
  EXPECT_NEAR(o / n, 1.0, 4.0 * std::sqrt(2.0 / n));
  const auto ev = sample_goe_eigenvalues(3, rng);
  EXPECT_TRUE(std::is_sorted(ev.begin(), ev.end()));
}

}  // namespace
}  // namespace lkcfield

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
#include "lkcfield/gkf.hpp"
#include "oracles.hpp"

namespace lkcfield {
namespace {

using oracle::kPi;

LkcVector make_lkcs(std::vector<double> v) {
  LkcVector L;
  L.dim = static_cast<int>(v.size()) - 1;
  L.values = std::move(v);
  return L;
}

// Explicit Hermite polynomials and the EC densities built from them.
double he(int n, double x) {
  switch (n) {
    case 0: return 1.0;
    case 1: return x;
    case 2: return x * x - 1.0;
    case 3: return x * x * x - 3.0 * x;
    case 4: return x * x * x * x - 6.0 * x * x + 3.0;
  }
  return NAN;
}

double eec_oracle(const std::vector<double>& L, double u) {
  double s = L[0] * oracle::normal_tail(u);
  for (std::size_t j = 1; j < L.size(); ++j) {
    s += L[j] * std::pow(2.0 * kPi, -(j + 1.0) / 2.0) * he(static_cast<int>(j) - 1, u) * std::exp(-u * u / 2.0);
  }
  return s;
}

TEST(Hermite, ExplicitPolynomials) {
  for (double x : {-2.3, 0.0, 1.0, 3.7})
    for (int n = 0; n <= 4; ++n) EXPECT_NEAR(hermite(n, x), he(n, x), 1e-12 * (1 + std::abs(he(n, x))));
  EXPECT_DOUBLE_EQ(hermite(2, 1.0), 0.0);
  EXPECT_DOUBLE_EQ(hermite(0, 5.0), 1.0);
}

TEST(Hermite, MillsRatioTerm) {
  EXPECT_NEAR(hermite(-1, 0.0), std::sqrt(kPi / 2.0), 1e-14);
  for (double x : {1.0, 5.0, 8.5}) {
    EXPECT_NEAR(hermite(-1, x), oracle::normal_tail(x) / (std::exp(-x * x / 2) / std::sqrt(2 * kPi)),
                1e-12 * hermite(-1, x));
  }
  // Asymptotic series where erfc underflows.
  const double x = 40.0;
  const double asym = 1 / x - 1 / std::pow(x, 3) + 3 / std::pow(x, 5) - 15 / std::pow(x, 7) +
                      105 / std::pow(x, 9) - 945 / std::pow(x, 11);
  EXPECT_NEAR(hermite(-1, x), asym, 1e-15);
}

TEST(Tail, StableForLargeArguments) {
  EXPECT_NEAR(gaussian_tail(0.0), 0.5, 1e-16);
  EXPECT_GT(gaussian_tail(30.0), 0.0);
  EXPECT_NEAR(gaussian_tail(-3.0), 1.0 - oracle::normal_tail(3.0), 1e-15);
}

TEST(FlagCoefficient, SmallCases) {
  EXPECT_DOUBLE_EQ(flag_coefficient(3, 0), 1.0);
  EXPECT_NEAR(flag_coefficient(3, 3), 1.0, 1e-14);
  EXPECT_NEAR(flag_coefficient(2, 1), kPi / 2.0, 1e-14);
  try {
    flag_coefficient(2, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kIndexOutOfRange);
  }
}

TEST(Minkowski, Functionals) {
  EXPECT_NEAR(gaussian_minkowski(0, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(gaussian_minkowski(1, 1.2), std::exp(-0.72) / std::sqrt(2 * kPi), 1e-15);
  EXPECT_NEAR(gaussian_minkowski(3, 1.0), 0.0, 1e-15);
}

TEST(Eec, SinglePointIsTail) {
  const auto L = make_lkcs({1.0});
  for (double u = -3.0; u <= 6.0; u += 0.25) EXPECT_NEAR(expected_ec(L, u), gaussian_tail(u), 1e-15);
}

TEST(Eec, UnitLineAtTwo) {
  const auto L = make_lkcs({1.0, 2.0});
  EXPECT_NEAR(expected_ec(L, 2.0), 0.02275013 + 2.0 / (2 * kPi) * std::exp(-2.0), 1e-8);
  EXPECT_NEAR(expected_ec(L, 2.0), 0.06583, 1e-5);
}

TEST(Eec, MatchesExplicitDensities) {
  const auto L = make_lkcs({1.0, 9.8, 7.5, 3.1, 0.4});
  for (double u : {-1.0, 0.5, 2.0, 3.3, 5.0}) {
    EXPECT_NEAR(expected_ec(L, u), eec_oracle(L.values, u), 1e-12) << u;
    EXPECT_NEAR(expected_ec_kinematic(L, u), expected_ec(L, u), 1e-12) << u;
  }
  EXPECT_LT(expected_ec(L, 40.0), 1e-300);
}

TEST(Eec, DerivativeMatchesFiniteDifference) {
  const auto L = make_lkcs({1.0, 9.8, 7.5});
  for (double u : {0.5, 2.0, 3.5}) {
    const double h = 1e-5;
    const double fd = (expected_ec(L, u + h) - expected_ec(L, u - h)) / (2 * h);
    EXPECT_NEAR(expected_ec_derivative(L, u), fd, 1e-8);
  }
}

TEST(Threshold, BisectionOracle) {
  const auto L = make_lkcs({1.0, 2.0});
  const double want = oracle::bisect(
      [](double u) { return oracle::normal_tail(u) + 2.0 / (2 * kPi) * std::exp(-u * u / 2) - 0.05; }, 1.0, 6.0);
  EXPECT_NEAR(threshold_for_level(L, 0.05), want, 1e-9);
}

TEST(Threshold, RoundTripAndMonotone) {
  const auto L = make_lkcs({1.0, 9.81909290830039, 7.5});
  double prev = -1e9;
  for (double a : {0.1, 0.05, 0.01, 0.001}) {
    const double u = threshold_for_level(L, a);
    EXPECT_NEAR(expected_ec(L, u), a, 1e-9);
    EXPECT_GT(u, prev);
    prev = u;
  }
  EXPECT_NEAR(threshold_for_level(L, expected_ec(L, 3.0)), 3.0, 1e-6);
}

TEST(Threshold, Errors) {
  // A strong third-order term puts a local maximum of the EEC near u = 1.5.
  const auto L = make_lkcs({1.0, 0.0, 0.0, 20.0});
  const double peak = expected_ec(L, monotone_onset(L));
  ASSERT_LT(peak, 0.99);
  try {
    threshold_for_level(L, peak + 0.01);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kLevelNotAttainable);
  }
  try {
    threshold_for_level(L, 0.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Crossing, EecPositiveAboveCrossing) {
  const auto L = make_lkcs({1.0, 9.8, 7.5, 3.1});
  const double c = positivity_crossing(L);
  for (double u = c + 1e-6; u < c + 8.0; u += 0.05) EXPECT_GT(expected_ec(L, u), 0.0) << u;
  const double onset = monotone_onset(L);
  for (double u = onset + 1e-6; u < onset + 8.0; u += 0.05) EXPECT_LT(expected_ec_derivative(L, u), 0.0) << u;
}

TEST(Curve, GridAndMetadata) {
  auto L = make_lkcs({0.0, 0.0, 0.0, 0.0, 0.3, 0.02});
  L.truncated = true;
  L.lowest_valid = 4;
  const auto grid = parse_grid("0:5:0.5");
  ASSERT_EQ(grid.size(), 11u);
  EXPECT_DOUBLE_EQ(grid.back(), 5.0);
  const auto c = eec_curve(L, grid);
  EXPECT_EQ(c.eec_values.size(), grid.size());
  EXPECT_EQ(c.metadata.at("truncated"), "true");
  try {
    eec_curve(L, {1.0, 0.5});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnorderedInput);
  }
}

}  // namespace
}  // namespace lkcfield

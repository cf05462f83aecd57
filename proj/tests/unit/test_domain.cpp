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
#include <numbers>

#include <gtest/gtest.h>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"

namespace lkcfield {
namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kIoError;
}

TEST(Rectangle, BoxLkcs) {
  const auto g = rectangle_geometry({2.0, 3.0, 5.0});
  ASSERT_EQ(g.euclid_lkcs.size(), 4u);
  EXPECT_DOUBLE_EQ(g.euclid_lkcs[0], 1.0);
  EXPECT_DOUBLE_EQ(g.euclid_lkcs[1], 10.0);
  EXPECT_DOUBLE_EQ(g.euclid_lkcs[2], 31.0);
  EXPECT_DOUBLE_EQ(g.euclid_lkcs[3], 30.0);
  EXPECT_DOUBLE_EQ(g.boundary_measure, 62.0);
  EXPECT_NO_THROW(validate_geometry(g));
}

TEST(Ball, DiskAndSphere) {
  const auto d = ball_geometry(2, 1.5);
  EXPECT_NEAR(d.euclid_lkcs[1], kPi * 1.5, 1e-13);
  EXPECT_NEAR(d.euclid_lkcs[2], kPi * 2.25, 1e-13);
  const auto b = ball_geometry(3, 2.0);
  EXPECT_NEAR(b.euclid_lkcs[1], 4.0 * 2.0, 1e-12);
  EXPECT_NEAR(b.euclid_lkcs[2], 2.0 * kPi * 4.0, 1e-12);
  EXPECT_NEAR(b.euclid_lkcs[3], 4.0 / 3.0 * kPi * 8.0, 1e-12);
  EXPECT_NO_THROW(validate_geometry(b));
  const auto seg = ball_geometry(1, 0.5);
  EXPECT_NEAR(seg.euclid_lkcs[1], 1.0, 1e-14);
}

TEST(Steiner, SquareAndDiskPolynomials) {
  const auto sq = rectangle_geometry({1.0, 1.0});
  const auto disk = ball_geometry(2, 1.0);
  for (double r : {0.0, 0.05, 0.3}) {
    EXPECT_NEAR(steiner_tube_volume(sq, r), 1.0 + 4.0 * r + kPi * r * r, 1e-13);
    EXPECT_NEAR(steiner_tube_volume(disk, r), kPi * (1.0 + r) * (1.0 + r), 1e-13);
  }
  const auto cube = rectangle_geometry({1.0, 1.0, 1.0});
  const double r = 0.2;
  EXPECT_NEAR(steiner_tube_volume(cube, r), 1.0 + 6 * r + 3 * kPi * r * r + 4.0 / 3.0 * kPi * r * r * r,
              1e-13);
}

TEST(TubeEstimate, WithinFourStandardErrors) {
  const auto sq = rectangle_geometry({1.0, 1.0});
  const auto est = tube_volume_estimate(sq, 0.1, 200000, 11, 2);
  EXPECT_NEAR(est.value, steiner_tube_volume(sq, 0.1), 4.0 * est.standard_error);
  const auto ball = ball_geometry(3, 1.0);
  const auto eb = tube_volume_estimate(ball, 0.2, 200000, 12, 2);
  EXPECT_NEAR(eb.value, steiner_tube_volume(ball, 0.2), 4.0 * eb.standard_error);
}

TEST(TubeEstimate, IndependentOfThreadCount) {
  const auto sq = rectangle_geometry({1.0, 2.0});
  const auto a = tube_volume_estimate(sq, 0.05, 50000, 3, 1);
  const auto b = tube_volume_estimate(sq, 0.05, 50000, 3, 5);
  EXPECT_EQ(a.value, b.value);
}

TEST(DomainErrors, Codes) {
  EXPECT_EQ(code_of([] { rectangle_geometry({}); }), ErrorCode::kEmptySideList);
  EXPECT_EQ(code_of([] { rectangle_geometry({1.0, -1.0}); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { ball_geometry(4, 1.0); }), ErrorCode::kUnsupportedDimension);
  EXPECT_EQ(code_of([] { parse_domain_spec("torus:1"); }), ErrorCode::kConfigInvalid);
  EXPECT_EQ(code_of([] { parse_domain_spec("rect:"); }), ErrorCode::kEmptySideList);
  auto g = rectangle_geometry({1.0, 1.0});
  g.euclid_lkcs.pop_back();
  EXPECT_EQ(code_of([&] { validate_geometry(g); }), ErrorCode::kDimensionMismatch);
  auto h = rectangle_geometry({1.0, 1.0});
  h.volume = 2.0;
  EXPECT_EQ(code_of([&] { validate_geometry(h); }), ErrorCode::kInvariantViolation);
}

TEST(DomainSpec, Parses) {
  const auto r = parse_domain_spec("rect:10");
  EXPECT_EQ(r.dimension, 1);
  EXPECT_DOUBLE_EQ(r.volume, 10.0);
  const auto b = parse_domain_spec("ball:2,3");
  EXPECT_EQ(b.shape, ShapeTag::kBall);
  EXPECT_NEAR(b.volume, 9.0 * kPi, 1e-12);
}

}  // namespace
}  // namespace lkcfield

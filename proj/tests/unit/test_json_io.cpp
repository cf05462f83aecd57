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


#include <gtest/gtest.h>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"
#include "lkcfield/json_io.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/scale_space.hpp"

namespace lkcfield {
namespace {

TEST(Json, MomentsRoundTrip) {
  const auto m = compute_moments(make_marr_kernel(2));
  const Json j = m;
  const auto back = j.get<KernelMoments>();
  EXPECT_EQ(back.N, 2);
  EXPECT_EQ(back.kernel, "marr");
  EXPECT_NEAR(back.kappa, m.kappa, 1e-15);
  EXPECT_NEAR(back.c_big, m.c_big, 1e-15);
  EXPECT_NEAR(back.d_big, m.d_big, 1e-15);
}

TEST(Json, GeometryRoundTripAndValidation) {
  const auto g = ball_geometry(3, 1.5);
  Json j = g;
  const auto back = j.get<DomainGeometry>();
  EXPECT_EQ(back.shape, ShapeTag::kBall);
  EXPECT_EQ(back.euclid_lkcs, g.euclid_lkcs);
  j["volume"] = 1.0;
  try {
    j.get<DomainGeometry>();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvariantViolation);
  }
}

TEST(Json, LkcVectorWithBreakdown) {
  const auto m = compute_moments(make_gaussian_kernel(1));
  const auto L = scale_space_lkcs(m, rectangle_geometry({10.0}), ScaleRange{0.5, 2.0});
  const Json j = L;
  EXPECT_TRUE(j.contains("breakdown"));
  const auto back = lkc_vector_from_document(j);
  EXPECT_EQ(back.values, L.values);
  EXPECT_EQ(back.breakdown, L.breakdown);
  const auto nested = lkc_vector_from_document(Json{{"lkcs", j}});
  EXPECT_EQ(nested.values, L.values);
}

TEST(Json, BadDocuments) {
  try {
    lkc_vector_from_document(Json{{"foo", 1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigInvalid);
  }
  try {
    lkc_vector_from_document(Json{{"values", {1.0, 2.0}}, {"dim", 3}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigInvalid);
  }
  try {
    Json{{"N", 2}}.get<KernelMoments>();
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConfigInvalid);
  }
}

}  // namespace
}  // namespace lkcfield

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


#include <atomic>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "lkcfield/parallel.hpp"
#include "lkcfield/random.hpp"

namespace lkcfield {
namespace {

TEST(Parallel, VisitsEveryIndexOnce) {
  for (unsigned t : {1u, 3u, 8u}) {
    std::vector<std::atomic<int>> hits(257);
    parallel_for(hits.size(), t, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
  }
}

TEST(Parallel, RethrowsLowestFailingIndex) {
  for (unsigned t : {1u, 4u}) {
    try {
      parallel_for(100, t, [](std::size_t i) {
        if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
      });
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "17");
    }
  }
}

TEST(Parallel, ResolveThreads) {
  EXPECT_GE(resolve_threads(0), 1u);
  EXPECT_EQ(resolve_threads(5), 5u);
}

TEST(Random, SubstreamsAreReproducibleAndDistinct) {
  auto a = substream(42, 3, 1);
  auto b = substream(42, 3, 1);
  auto c = substream(42, 4, 1);
  auto d = substream(42, 3, 2);
  const auto va = a();
  EXPECT_EQ(va, b());
  EXPECT_NE(va, c());
  EXPECT_NE(va, d());
}

}  // namespace
}  // namespace lkcfield

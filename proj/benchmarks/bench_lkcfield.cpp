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


#include <benchmark/benchmark.h>

#include "lkcfield/domain.hpp"
#include "lkcfield/gkf.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/rotation_space.hpp"
#include "lkcfield/scale_space.hpp"
#include "lkcfield/simulation.hpp"

namespace {

using namespace lkcfield;

void BM_Moments(benchmark::State& state) {
  const auto k = make_marr_kernel(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(compute_moments(k));
}
BENCHMARK(BM_Moments)->DenseRange(1, 3);

void BM_ScalePipeline(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto m = compute_moments(make_gaussian_kernel(N));
  const auto g = ball_geometry(N, 2.0);
  for (auto _ : state) benchmark::DoNotOptimize(scale_space_lkcs(m, g, ScaleRange{0.5, 2.0}));
}
BENCHMARK(BM_ScalePipeline)->DenseRange(1, 3);

void BM_RotationTopTwo(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  const auto m = compute_moments(make_gaussian_kernel(N));
  std::vector<double> sides(static_cast<std::size_t>(N), 1.0);
  const auto g = rectangle_geometry(sides);
  RotationOptions opts;
  opts.r_samples = 2000;
  opts.seed = 1;
  for (auto _ : state) benchmark::DoNotOptimize(lkc_rotation_top_two(RotationParams{N, 1.0, 2.0}, m, g, opts));
}
BENCHMARK(BM_RotationTopTwo)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_Threshold(benchmark::State& state) {
  const auto m = compute_moments(make_gaussian_kernel(2));
  const auto L = scale_space_lkcs(m, rectangle_geometry({10.0, 10.0}), ScaleRange{0.5, 2.0});
  for (auto _ : state) benchmark::DoNotOptimize(threshold_for_level(L, 0.05));
}
BENCHMARK(BM_Threshold);

void BM_FieldRealization(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  GridSpec spec;
  spec.extent.assign(static_cast<std::size_t>(N), N == 1 ? 10.0 : 4.0);
  spec.range = ScaleRange{0.5, 2.0};
  const ScaleFieldSimulator sim(make_gaussian_kernel(N), spec);
  std::uint64_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sim.realize(1, i++));
}
BENCHMARK(BM_FieldRealization)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_EulerCharacteristic(benchmark::State& state) {
  GridSpec spec;
  spec.extent = {4.0, 4.0};
  spec.range = ScaleRange{0.5, 2.0};
  const auto grid = simulate_scale_field(make_gaussian_kernel(2), spec, 3);
  for (auto _ : state) benchmark::DoNotOptimize(excursion_euler_characteristic(grid, 1.0));
}
BENCHMARK(BM_EulerCharacteristic)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

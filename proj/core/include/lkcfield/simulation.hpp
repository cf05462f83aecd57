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

#ifndef LKCFIELD_SIMULATION_HPP
#define LKCFIELD_SIMULATION_HPP

#include <cstdint>
#include <memory>
#include <vector>

#include "lkcfield/domain.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/scale_space.hpp"

namespace lkcfield {

/// Discretization of T x [sigma_low, sigma_high] for T = prod [0, extent_i].
struct GridSpec {
  std::vector<double> extent;
  ScaleRange range;
  /// Requested spatial spacing; each axis uses the largest spacing not above
  /// it that divides its extent. Zero selects sigma_low / 4.
  double spacing = 0.0;
  int scales_per_octave = 8;
  /// Noise margin around T, in units of sigma_high.
  double padding_sigmas = 5.0;

  int dimension() const { return static_cast<int>(extent.size()); }
};

/// Raises ResolutionTooCoarse (spacing > sigma_low/4 or fewer than 8 scales
/// per octave), PaddingTooSmall (margin < 5 sigma_high) or
/// UnsupportedDimension (N outside 1..2).
void validate_grid(const GridSpec& spec);

/// Log-spaced scales covering the range, endpoints included.
std::vector<double> scale_grid(const GridSpec& spec);

/// One realization on the (scale, x[, y]) lattice, row-major with scale as
/// the slowest axis.
struct FieldGrid {
  std::vector<double> sigmas;
  std::vector<double> spacing;        // per spatial axis
  std::vector<std::size_t> shape;      // {scales, n_x[, n_y]}
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
};

class ScaleFieldSimulator {
 public:
  ScaleFieldSimulator(const RadialKernel& kernel, const GridSpec& spec);
  ~ScaleFieldSimulator();
  ScaleFieldSimulator(const ScaleFieldSimulator&) = delete;
  ScaleFieldSimulator& operator=(const ScaleFieldSimulator&) = delete;

  /// Realization `index` of the run seeded by `seed`. Safe to call
  /// concurrently; the result depends only on (seed, index).
  FieldGrid realize(std::uint64_t seed, std::uint64_t index) const;

  const GridSpec& spec() const noexcept { return spec_; }

 private:
  struct Impl;
  GridSpec spec_;
  std::unique_ptr<Impl> impl_;
};

FieldGrid simulate_scale_field(const RadialKernel& kernel, const GridSpec& spec,
                               std::uint64_t seed);

/// Euler characteristic of the cubical complex built from the lattice cells
/// whose vertices all satisfy value >= u. Lattices of dimension 1..3.
long excursion_euler_characteristic(const std::vector<double>& values,
                                    const std::vector<std::size_t>& shape, double u);
long excursion_euler_characteristic(const FieldGrid& grid, double u);

struct ExcursionStats {
  std::vector<double> thresholds;
  std::vector<double> mean_chi;
  std::vector<double> se_chi;
  std::vector<double> p_sup;
  std::vector<double> se_p_sup;
  std::uint64_t realizations = 0;
  std::uint64_t seed = 0;
};

/// Combines two independent runs over the same thresholds.
ExcursionStats pool_stats(const ExcursionStats& a, const ExcursionStats& b);

/// Monte-Carlo E{chi(A_u)} and P{sup f >= u}. Identical results for any
/// thread count. `first_index` offsets the realization counter so runs can
/// be split and pooled.
ExcursionStats monte_carlo_eec(const RadialKernel& kernel, const GridSpec& spec,
                               const std::vector<double>& thresholds,
                               std::uint64_t realizations, std::uint64_t seed,
                               unsigned threads = 1, std::uint64_t first_index = 0);

}  // namespace lkcfield

#endif  // LKCFIELD_SIMULATION_HPP

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

#include "lkcfield/simulation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <mutex>
#include <random>

#include <fftw3.h>

#include "lkcfield/errors.hpp"
#include "lkcfield/parallel.hpp"
#include "lkcfield/random.hpp"

namespace lkcfield {

namespace {

constexpr std::uint64_t kNoiseTag = 0x6e6f697365000000ull;

// The FFTW planner is not re-entrant; execution with new arrays is.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

template <class T>
struct FftwBuffer {
  T* data = nullptr;
  explicit FftwBuffer(std::size_t n) : data(static_cast<T*>(fftw_malloc(sizeof(T) * n))) {
    if (data == nullptr) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

double requested_spacing(const GridSpec& spec) {
  return spec.spacing > 0.0 ? spec.spacing : spec.range.sigma_low / 4.0;
}

}  // namespace

void validate_grid(const GridSpec& spec) {
  const int N = spec.dimension();
  if (N < 1 || N > 2) raise(ErrorCode::kUnsupportedDimension, "field simulation supports N = 1, 2");
  for (double t : spec.extent) {
    if (!(t > 0.0) || !std::isfinite(t)) raise(ErrorCode::kInvalidArgument, "extent must be positive");
  }
  validate_scale_range(spec.range);
  if (spec.spacing < 0.0) raise(ErrorCode::kInvalidArgument, "spacing must be >= 0");
  if (requested_spacing(spec) > spec.range.sigma_low / 4.0 * (1.0 + 1e-12)) {
    raise(ErrorCode::kResolutionTooCoarse, "spacing must not exceed sigma_low / 4");
  }
  if (spec.scales_per_octave < 8) {
    raise(ErrorCode::kResolutionTooCoarse, "need at least 8 scales per octave");
  }
  if (spec.padding_sigmas < 5.0) raise(ErrorCode::kPaddingTooSmall, "padding must be >= 5 sigma_high");
}

std::vector<double> scale_grid(const GridSpec& spec) {
  const double lo = spec.range.sigma_low;
  const double hi = spec.range.sigma_high;
  const double octaves = std::log2(hi / lo);
  const int intervals = std::max(1, static_cast<int>(std::ceil(octaves * spec.scales_per_octave - 1e-9)));
  std::vector<double> out(static_cast<std::size_t>(intervals) + 1);
  for (int i = 0; i <= intervals; ++i) {
    out[static_cast<std::size_t>(i)] = lo * std::pow(hi / lo, static_cast<double>(i) / intervals);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

struct ScaleFieldSimulator::Impl {
  int N = 0;
  std::vector<double> sigmas;
  std::vector<double> h;            // spacing per axis
  std::vector<std::size_t> n;       // window points per axis
  std::vector<std::size_t> pad;     // padding cells per axis
  std::vector<int> m;               // FFT size per axis
  std::size_t real_size = 0;
  std::size_t complex_size = 0;
  double noise_sd = 0.0;
  std::vector<std::vector<std::complex<double>>> kernel_hat;
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

ScaleFieldSimulator::ScaleFieldSimulator(const RadialKernel& kernel, const GridSpec& spec)
    : spec_(spec), impl_(std::make_unique<Impl>()) {
  validate_grid(spec);
  if (kernel.dimension != spec.dimension()) {
    raise(ErrorCode::kDimensionMismatch, "kernel and grid dimensions differ");
  }
  Impl& s = *impl_;
  s.N = spec.dimension();
  s.sigmas = scale_grid(spec);
  const double hreq = requested_spacing(spec);
  double cell = 1.0;
  for (int d = 0; d < s.N; ++d) {
    const double T = spec.extent[static_cast<std::size_t>(d)];
    const auto cells = static_cast<std::size_t>(std::ceil(T / hreq - 1e-9));
    const double hd = T / static_cast<double>(cells);
    const auto p = static_cast<std::size_t>(
        std::ceil(spec.padding_sigmas * spec.range.sigma_high / hd - 1e-9));
    s.h.push_back(hd);
    s.n.push_back(cells + 1);
    s.pad.push_back(p);
    s.m.push_back(static_cast<int>(cells + 1 + 2 * p));
    cell *= hd;
  }
  s.noise_sd = std::sqrt(cell);
  s.real_size = 1;
  for (int d = 0; d < s.N; ++d) s.real_size *= static_cast<std::size_t>(s.m[static_cast<std::size_t>(d)]);
  s.complex_size = s.real_size / static_cast<std::size_t>(s.m.back()) *
                   static_cast<std::size_t>(s.m.back() / 2 + 1);

  FftwBuffer<double> real(s.real_size);
  FftwBuffer<fftw_complex> cplx(s.complex_size);
  {
    std::lock_guard<std::mutex> lock(planner_mutex());
    s.forward = fftw_plan_dft_r2c(s.N, s.m.data(), real.data, cplx.data, FFTW_ESTIMATE);
    s.backward = fftw_plan_dft_c2r(s.N, s.m.data(), cplx.data, real.data, FFTW_ESTIMATE);
  }
  if (s.forward == nullptr || s.backward == nullptr) {
    raise(ErrorCode::kInvalidArgument, "could not build FFT plans");
  }

  // Kernel sampled on offsets |k_d| <= pad_d, wrapped into the periodic
  // array. Since the window sits pad_d cells inside the noise array, the
  // periodic convolution equals the linear one there.
  const double scale_norm = 1.0 / static_cast<double>(s.real_size);
  for (double sigma : s.sigmas) {
    std::fill(real.data, real.data + s.real_size, 0.0);
    const double amp = std::pow(sigma, -s.N / 2.0);
    if (s.N == 1) {
      const auto P = static_cast<long>(s.pad[0]);
      const long M = s.m[0];
      for (long k = -P; k <= P; ++k) {
        const double x = k * s.h[0] / sigma;
        real.data[(k + M) % M] = amp * kernel.profile(x * x);
      }
    } else {
      const auto P0 = static_cast<long>(s.pad[0]);
      const auto P1 = static_cast<long>(s.pad[1]);
      const long M0 = s.m[0];
      const long M1 = s.m[1];
      for (long a = -P0; a <= P0; ++a) {
        for (long b = -P1; b <= P1; ++b) {
          const double x = a * s.h[0] / sigma;
          const double y = b * s.h[1] / sigma;
          real.data[static_cast<std::size_t>(((a + M0) % M0) * M1 + (b + M1) % M1)] =
              amp * kernel.profile(x * x + y * y);
        }
      }
    }
    fftw_execute_dft_r2c(s.forward, real.data, cplx.data);
    std::vector<std::complex<double>> hat(s.complex_size);
    for (std::size_t i = 0; i < s.complex_size; ++i) {
      hat[i] = std::complex<double>(cplx.data[i][0], cplx.data[i][1]) * scale_norm;
    }
    s.kernel_hat.push_back(std::move(hat));
  }
}

ScaleFieldSimulator::~ScaleFieldSimulator() {
  if (!impl_) return;
  std::lock_guard<std::mutex> lock(planner_mutex());
  if (impl_->forward) fftw_destroy_plan(impl_->forward);
  if (impl_->backward) fftw_destroy_plan(impl_->backward);
}

FieldGrid ScaleFieldSimulator::realize(std::uint64_t seed, std::uint64_t index) const {
  const Impl& s = *impl_;
  FftwBuffer<double> noise(s.real_size);
  FftwBuffer<fftw_complex> noise_hat(s.complex_size);
  FftwBuffer<fftw_complex> product(s.complex_size);
  FftwBuffer<double> out(s.real_size);

  Rng rng = substream(seed, index, kNoiseTag);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (std::size_t i = 0; i < s.real_size; ++i) noise.data[i] = s.noise_sd * gauss(rng);
  fftw_execute_dft_r2c(s.forward, noise.data, noise_hat.data);

  FieldGrid grid;
  grid.sigmas = s.sigmas;
  grid.spacing = s.h;
  grid.shape.push_back(s.sigmas.size());
  std::size_t window = 1;
  for (std::size_t d = 0; d < s.n.size(); ++d) {
    grid.shape.push_back(s.n[d]);
    window *= s.n[d];
  }
  grid.values.resize(s.sigmas.size() * window);

  for (std::size_t k = 0; k < s.sigmas.size(); ++k) {
    const auto& hat = s.kernel_hat[k];
    for (std::size_t i = 0; i < s.complex_size; ++i) {
      const std::complex<double> z =
          std::complex<double>(noise_hat.data[i][0], noise_hat.data[i][1]) * hat[i];
      product.data[i][0] = z.real();
      product.data[i][1] = z.imag();
    }
    fftw_execute_dft_c2r(s.backward, product.data, out.data);
    double* dst = grid.values.data() + k * window;
    if (s.N == 1) {
      for (std::size_t x = 0; x < s.n[0]; ++x) dst[x] = out.data[x + s.pad[0]];
    } else {
      const auto M1 = static_cast<std::size_t>(s.m[1]);
      for (std::size_t x = 0; x < s.n[0]; ++x) {
        for (std::size_t y = 0; y < s.n[1]; ++y) {
          dst[x * s.n[1] + y] = out.data[(x + s.pad[0]) * M1 + y + s.pad[1]];
        }
      }
    }
  }
  return grid;
}

FieldGrid simulate_scale_field(const RadialKernel& kernel, const GridSpec& spec,
                               std::uint64_t seed) {
  return ScaleFieldSimulator(kernel, spec).realize(seed, 0);
}

long excursion_euler_characteristic(const std::vector<double>& values,
                                    const std::vector<std::size_t>& shape, double u) {
  const std::size_t d = shape.size();
  if (d < 1 || d > 3) raise(ErrorCode::kUnsupportedDimension, "lattice dimension must be 1..3");
  std::size_t total = 1;
  for (std::size_t s : shape) total *= s;
  if (total != values.size()) raise(ErrorCode::kDimensionMismatch, "values do not match shape");
  if (total == 0) return 0;

  std::vector<std::size_t> stride(d, 1);
  for (std::size_t k = d - 1; k > 0; --k) stride[k - 1] = stride[k] * shape[k];

  const std::size_t masks = std::size_t{1} << d;
  // cells[mask][i]: the cell at base vertex i spanning the axes in `mask`
  // exists and has all its vertices above u.
  std::vector<std::vector<std::uint8_t>> cells(masks);
  cells[0].resize(total);
  for (std::size_t i = 0; i < total; ++i) cells[0][i] = values[i] >= u ? 1 : 0;
  long chi = 0;
  for (std::size_t mask = 0; mask < masks; ++mask) {
    if (mask > 0) {
      const std::size_t k = static_cast<std::size_t>(std::countr_zero(mask));
      const auto& prev = cells[mask ^ (std::size_t{1} << k)];
      auto& cur = cells[mask];
      cur.assign(total, 0);
      for (std::size_t i = 0; i < total; ++i) {
        const std::size_t coord = (i / stride[k]) % shape[k];
        if (coord + 1 < shape[k]) cur[i] = prev[i] & prev[i + stride[k]];
      }
    }
    long count = 0;
    for (std::uint8_t c : cells[mask]) count += c;
    chi += (std::popcount(mask) % 2 == 0) ? count : -count;
  }
  return chi;
}

long excursion_euler_characteristic(const FieldGrid& grid, double u) {
  return excursion_euler_characteristic(grid.values, grid.shape, u);
}

ExcursionStats pool_stats(const ExcursionStats& a, const ExcursionStats& b) {
  if (a.thresholds != b.thresholds) raise(ErrorCode::kDimensionMismatch, "threshold grids differ");
  if (a.realizations == 0) return b;
  if (b.realizations == 0) return a;
  const double na = static_cast<double>(a.realizations);
  const double nb = static_cast<double>(b.realizations);
  const double n = na + nb;
  ExcursionStats out;
  out.thresholds = a.thresholds;
  out.realizations = a.realizations + b.realizations;
  out.seed = a.seed;
  for (std::size_t i = 0; i < a.thresholds.size(); ++i) {
    const double mean = (na * a.mean_chi[i] + nb * b.mean_chi[i]) / n;
    // Recover each run's sum of squares from its standard error.
    const double ssa = a.se_chi[i] * a.se_chi[i] * na * (na - 1.0) + na * a.mean_chi[i] * a.mean_chi[i];
    const double ssb = b.se_chi[i] * b.se_chi[i] * nb * (nb - 1.0) + nb * b.mean_chi[i] * b.mean_chi[i];
    const double var = std::max(0.0, (ssa + ssb - n * mean * mean) / (n - 1.0));
    out.mean_chi.push_back(mean);
    out.se_chi.push_back(std::sqrt(var / n));
    const double p = (na * a.p_sup[i] + nb * b.p_sup[i]) / n;
    out.p_sup.push_back(p);
    out.se_p_sup.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  return out;
}

ExcursionStats monte_carlo_eec(const RadialKernel& kernel, const GridSpec& spec,
                               const std::vector<double>& thresholds,
                               std::uint64_t realizations, std::uint64_t seed,
                               unsigned threads, std::uint64_t first_index) {
  if (realizations < 100) raise(ErrorCode::kInvalidArgument, "need at least 100 realizations");
  if (thresholds.empty()) raise(ErrorCode::kInvalidArgument, "need at least one threshold");
  const ScaleFieldSimulator sim(kernel, spec);
  const std::size_t nt = thresholds.size();
  std::vector<long> chi(realizations * nt);
  std::vector<double> sup(realizations);
  parallel_for(realizations, threads, [&](std::size_t r) {
    const FieldGrid g = sim.realize(seed, first_index + r);
    sup[r] = *std::max_element(g.values.begin(), g.values.end());
    for (std::size_t t = 0; t < nt; ++t) chi[r * nt + t] = excursion_euler_characteristic(g, thresholds[t]);
  });

  ExcursionStats st;
  st.thresholds = thresholds;
  st.realizations = realizations;
  st.seed = seed;
  const double n = static_cast<double>(realizations);
  for (std::size_t t = 0; t < nt; ++t) {
    double sum = 0.0;
    double hits = 0.0;
    for (std::size_t r = 0; r < realizations; ++r) {
      sum += static_cast<double>(chi[r * nt + t]);
      if (sup[r] >= thresholds[t]) hits += 1.0;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (std::size_t r = 0; r < realizations; ++r) {
      const double dv = static_cast<double>(chi[r * nt + t]) - mean;
      ss += dv * dv;
    }
    st.mean_chi.push_back(mean);
    st.se_chi.push_back(std::sqrt(ss / (n - 1.0) / n));
    const double p = hits / n;
    st.p_sup.push_back(p);
    st.se_p_sup.push_back(std::sqrt(p * (1.0 - p) / n));
  }
  return st;
}

}  // namespace lkcfield

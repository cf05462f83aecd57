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

#include "lkcfield/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include <boost/math/special_functions/binomial.hpp>

#include "lkcfield/errors.hpp"
#include "lkcfield/parallel.hpp"
#include "lkcfield/random.hpp"

namespace lkcfield {

namespace {

constexpr std::uint64_t kTubeTag = 0x7475626500000000ull;

double binom(int n, int k) {
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                   static_cast<unsigned>(k));
}

bool close(double a, double b) {
  return std::abs(a - b) <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
}

std::vector<double> parse_numbers(std::string_view body, const std::string& spec) {
  std::vector<double> out;
  std::stringstream ss{std::string(body)};
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      raise(ErrorCode::kConfigInvalid, "bad number '" + item + "' in domain '" + spec + "'");
    }
  }
  return out;
}

}  // namespace

std::string_view shape_name(ShapeTag tag) noexcept {
  switch (tag) {
    case ShapeTag::kRectangle: return "rectangle";
    case ShapeTag::kBall: return "ball";
    case ShapeTag::kCustom: return "custom";
  }
  return "custom";
}

ShapeTag parse_shape_name(std::string_view name) {
  if (name == "rectangle") return ShapeTag::kRectangle;
  if (name == "ball") return ShapeTag::kBall;
  if (name == "custom") return ShapeTag::kCustom;
  raise(ErrorCode::kConfigInvalid, "unknown shape '" + std::string(name) + "'");
}

double unit_ball_volume(int n) {
  if (n < 0) raise(ErrorCode::kInvalidArgument, "negative ball dimension");
  return std::pow(std::numbers::pi, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

DomainGeometry rectangle_geometry(const std::vector<double>& sides) {
  if (sides.empty()) raise(ErrorCode::kEmptySideList, "rectangle needs at least one side");
  for (double s : sides) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      raise(ErrorCode::kInvalidArgument, "rectangle sides must be positive");
    }
  }
  const int N = static_cast<int>(sides.size());
  // Elementary symmetric polynomials e_0..e_N.
  std::vector<double> e(static_cast<std::size_t>(N) + 1, 0.0);
  e[0] = 1.0;
  for (double s : sides) {
    for (std::size_t j = e.size() - 1; j > 0; --j) e[j] += e[j - 1] * s;
  }
  DomainGeometry g;
  g.dimension = N;
  g.euclid_lkcs = e;
  g.volume = e.back();
  double boundary = 0.0;
  for (double s : sides) boundary += 2.0 * g.volume / s;
  g.boundary_measure = boundary;
  g.boundary_curvature_integrals.assign(static_cast<std::size_t>(N), 0.0);
  g.boundary_curvature_integrals[0] = boundary;
  g.shape = ShapeTag::kRectangle;
  g.parameters = sides;
  return g;
}

DomainGeometry ball_geometry(int N, double radius) {
  if (N < 1 || N > 3) raise(ErrorCode::kUnsupportedDimension, "balls are supported for N = 1..3");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    raise(ErrorCode::kInvalidArgument, "ball radius must be positive");
  }
  DomainGeometry g;
  g.dimension = N;
  const double wn = unit_ball_volume(N);
  for (int j = 0; j <= N; ++j) {
    g.euclid_lkcs.push_back(binom(N, j) * wn / unit_ball_volume(N - j) * std::pow(radius, j));
  }
  g.volume = wn * std::pow(radius, N);
  const double sphere = N * wn * std::pow(radius, N - 1);
  g.boundary_measure = sphere;
  for (int m = 0; m < N; ++m) {
    g.boundary_curvature_integrals.push_back(binom(N - 1, m) * std::pow(radius, -m) * sphere);
  }
  g.shape = ShapeTag::kBall;
  g.parameters = {radius};
  return g;
}

void validate_geometry(const DomainGeometry& g) {
  const auto N = static_cast<std::size_t>(g.dimension);
  if (g.dimension < 1) raise(ErrorCode::kUnsupportedDimension, "domain dimension must be >= 1");
  if (g.euclid_lkcs.size() != N + 1) {
    raise(ErrorCode::kDimensionMismatch, "expected N+1 Euclidean LKCs");
  }
  if (g.boundary_curvature_integrals.size() != N) {
    raise(ErrorCode::kDimensionMismatch, "expected N boundary curvature integrals");
  }
  if (!close(g.euclid_lkcs[0], 1.0)) raise(ErrorCode::kInvariantViolation, "L^E_0 must be 1");
  if (!close(g.euclid_lkcs[N], g.volume)) {
    raise(ErrorCode::kInvariantViolation, "L^E_N must equal the volume");
  }
  if (!close(g.euclid_lkcs[N - 1], g.boundary_measure / 2.0)) {
    raise(ErrorCode::kInvariantViolation, "L^E_{N-1} must equal half the boundary measure");
  }
  if (!close(g.boundary_curvature_integrals[0], g.boundary_measure)) {
    raise(ErrorCode::kInvariantViolation, "first curvature integral must be the boundary measure");
  }
}

double steiner_tube_volume(const DomainGeometry& g, double rho) {
  double total = 0.0;
  for (int j = 0; j <= g.dimension; ++j) {
    total += unit_ball_volume(g.dimension - j) * std::pow(rho, g.dimension - j) *
             g.euclid_lkcs[static_cast<std::size_t>(j)];
  }
  return total;
}

McEstimate tube_volume_estimate(const DomainGeometry& g, double rho,
                                std::uint64_t samples, std::uint64_t seed,
                                unsigned threads) {
  if (!(rho >= 0.0)) raise(ErrorCode::kInvalidArgument, "tube radius must be >= 0");
  if (samples == 0) raise(ErrorCode::kInvalidArgument, "need at least one sample");
  if (g.shape == ShapeTag::kCustom) {
    raise(ErrorCode::kInvalidArgument, "tube estimate needs a rectangle or ball");
  }
  const auto N = static_cast<std::size_t>(g.dimension);
  std::vector<double> lo(N);
  std::vector<double> hi(N);
  for (std::size_t d = 0; d < N; ++d) {
    if (g.shape == ShapeTag::kRectangle) {
      lo[d] = -rho;
      hi[d] = g.parameters[d] + rho;
    } else {
      lo[d] = -(g.parameters[0] + rho);
      hi[d] = g.parameters[0] + rho;
    }
  }
  double box = 1.0;
  for (std::size_t d = 0; d < N; ++d) box *= hi[d] - lo[d];

  auto inside = [&](const std::vector<double>& x) {
    double d2 = 0.0;
    if (g.shape == ShapeTag::kRectangle) {
      for (std::size_t d = 0; d < N; ++d) {
        const double over = std::max({0.0, -x[d], x[d] - g.parameters[d]});
        d2 += over * over;
      }
      return d2 <= rho * rho;
    }
    for (std::size_t d = 0; d < N; ++d) d2 += x[d] * x[d];
    const double reach = g.parameters[0] + rho;
    return d2 <= reach * reach;
  };

  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<std::uint64_t> hits(blocks, 0);
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng = substream(seed, b, kTubeTag);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kSamplesPerBlock);
    std::vector<double> x(N);
    std::uint64_t count = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      for (std::size_t d = 0; d < N; ++d) x[d] = lo[d] + (hi[d] - lo[d]) * unif(rng);
      if (inside(x)) ++count;
    }
    hits[b] = count;
  });
  const std::uint64_t total = std::accumulate(hits.begin(), hits.end(), std::uint64_t{0});
  const double p = static_cast<double>(total) / static_cast<double>(samples);
  McEstimate est;
  est.value = box * p;
  est.standard_error = box * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  est.samples = samples;
  return est;
}

DomainGeometry parse_domain_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    raise(ErrorCode::kConfigInvalid, "domain '" + spec + "' must look like rect:a,b or ball:N,r");
  }
  const std::string kind = spec.substr(0, colon);
  const auto nums = parse_numbers(std::string_view(spec).substr(colon + 1), spec);
  if (kind == "rect" || kind == "rectangle") {
    if (nums.empty()) raise(ErrorCode::kEmptySideList, "domain '" + spec + "' has no sides");
    return rectangle_geometry(nums);
  }
  if (kind == "ball") {
    if (nums.size() != 2 || nums[0] != std::floor(nums[0])) {
      raise(ErrorCode::kConfigInvalid, "ball domain needs an integer N and a radius");
    }
    return ball_geometry(static_cast<int>(nums[0]), nums[1]);
  }
  raise(ErrorCode::kConfigInvalid, "unknown domain kind '" + kind + "'");
}

}  // namespace lkcfield

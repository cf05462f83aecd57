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

#include "lkcfield/scale_space.hpp"

#include <cmath>
#include <numbers>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "lkcfield/errors.hpp"

namespace lkcfield {

namespace {

constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n),
                                                   static_cast<unsigned>(k));
}

double factorial(int n) { return boost::math::factorial<double>(static_cast<unsigned>(n)); }

// (e^{p b} - e^{p a}) / p, continued to p = 0.
double exp_increment(int p, double a, double b) {
  if (p == 0) return b - a;
  return (std::exp(p * b) - std::exp(p * a)) / p;
}

}  // namespace

void validate_scale_range(const ScaleRange& r) {
  if (!(r.sigma_low > 0.0) || !std::isfinite(r.sigma_high)) {
    raise(ErrorCode::kInvalidArgument, "scale bounds must be positive and finite");
  }
  if (r.sigma_low == r.sigma_high) {
    raise(ErrorCode::kDegenerateRange, "scale band has zero width");
  }
  if (r.sigma_low > r.sigma_high) {
    raise(ErrorCode::kInvalidArgument, "sigma_low must be below sigma_high");
  }
}

double mu_moment(int k) {
  if (k < 0) raise(ErrorCode::kInvalidArgument, "moment order must be >= 0");
  // int_0^inf z^k phi(z) dz = 2^{k/2} Gamma((k+1)/2) / (2 sqrt(pi)).
  return std::exp(0.5 * k * std::log(2.0) + std::lgamma((k + 1) / 2.0)) /
         (2.0 * std::sqrt(kPi));
}

double mu_moment_halved_odd(int k) {
  if (k < 0) raise(ErrorCode::kInvalidArgument, "moment order must be >= 0");
  if (k == 0) return 0.5;
  if (k % 2 == 1) {
    const int n = (k - 1) / 2;
    return std::pow(2.0, n - 1) * factorial(n) / std::sqrt(2.0 * kPi);
  }
  const int n = k / 2;
  return boost::math::double_factorial<double>(static_cast<unsigned>(2 * n - 1)) / 2.0;
}

LkcVector scale_alpha_lkcs(const KernelMoments& moments, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule) {
  if (geom.dimension != moments.N) {
    raise(ErrorCode::kDimensionMismatch, "kernel and domain dimensions differ");
  }
  return scale_alpha_lkcs(moments.gamma, moments.kappa, geom, range, rule);
}

LkcVector scale_alpha_lkcs(double gamma, double kappa, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule) {
  validate_scale_range(range);
  if (!(gamma > 0.0) || !(kappa > 0.0)) {
    raise(ErrorCode::kInvalidArgument, "gamma and kappa must be positive");
  }
  const int N = geom.dimension;
  if (N < 1 || geom.euclid_lkcs.size() != static_cast<std::size_t>(N) + 1) {
    raise(ErrorCode::kDimensionMismatch, "domain needs N+1 Euclidean LKCs");
  }
  auto mu = [rule](int k) {
    return rule == MuRule::kIntegral ? mu_moment(k) : mu_moment_halved_odd(k);
  };
  const auto& LE = geom.euclid_lkcs;
  const double s1 = range.s_low();
  const double s2 = range.s_high();
  const double sk = std::sqrt(kappa);
  const auto size = static_cast<std::size_t>(N) + 2;

  LkcVector out;
  out.dim = N + 1;
  for (auto label : kStrata) out.breakdown[std::string(label)].assign(size, 0.0);
  auto& interior = out.breakdown["interior"];
  auto& side = out.breakdown["side"];
  auto& top = out.breakdown["top"];
  auto& bottom = out.breakdown["bottom"];
  auto& edge_top = out.breakdown["edge_top"];
  auto& edge_bottom = out.breakdown["edge_bottom"];

  interior[static_cast<std::size_t>(N) + 1] =
      sk * std::pow(gamma, N / 2.0) * exp_increment(N, s1, s2) * LE[static_cast<std::size_t>(N)];

  for (int i = 1; i <= N; ++i) {
    side[static_cast<std::size_t>(i)] = sk * std::pow(gamma, (i - 1) / 2.0) *
                                        exp_increment(i - 1, s1, s2) *
                                        LE[static_cast<std::size_t>(i - 1)];
  }

  // The faces s = const are totally umbilic with normal curvature
  // kappa^{-1/2}; the face at s2 (smallest sigma) is the convex side.
  const double volume_top = std::pow(gamma, N / 2.0) * std::exp(N * s2) * LE[static_cast<std::size_t>(N)];
  const double volume_bottom = std::pow(gamma, N / 2.0) * std::exp(N * s1) * LE[static_cast<std::size_t>(N)];
  for (int i = 0; i <= N; ++i) {
    const int k = N - i;
    const double c = std::pow(2.0 * kPi * kappa, -k / 2.0) * mu(k) * binom(N, i);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    top[static_cast<std::size_t>(i)] = c * volume_top;
    bottom[static_cast<std::size_t>(i)] = sign * c * volume_bottom;
  }

  for (int i = 0; i < N; ++i) {
    const int k = N - 1 - i;
    double t = 0.0;
    double b = 0.0;
    for (int m = 0; m <= k; ++m) {
      const int d = N - 1 - m;
      const double c = std::pow(2.0 * kPi * kappa, -(k - m) / 2.0) * binom(d, i) * mu(k - m) *
                       LE[static_cast<std::size_t>(d)];
      const double sign = ((k - m) % 2 == 0) ? 1.0 : -1.0;
      t += c * std::pow(std::sqrt(gamma) * std::exp(s2), d);
      b += sign * c * std::pow(std::sqrt(gamma) * std::exp(s1), d);
    }
    edge_top[static_cast<std::size_t>(i)] = t;
    edge_bottom[static_cast<std::size_t>(i)] = b;
  }

  out.values.assign(size, 0.0);
  for (const auto& [label, contrib] : out.breakdown) {
    for (std::size_t i = 0; i < size; ++i) out.values[i] += contrib[i];
  }
  return out;
}

LkcVector lkcs_from_alpha(const LkcVector& alpha, double kappa) {
  if (!(kappa > 0.0)) raise(ErrorCode::kInvalidArgument, "kappa must be positive");
  const int dim = alpha.dim;
  if (alpha.values.size() != static_cast<std::size_t>(dim) + 1) {
    raise(ErrorCode::kDimensionMismatch, "alpha curvatures must cover 0..dim");
  }
  const double a = -1.0 / kappa;
  auto convert = [&](const std::vector<double>& src) {
    std::vector<double> dst(src.size(), 0.0);
    for (int i = 0; i <= dim; ++i) {
      double sum = 0.0;
      for (int n = 0; i + 2 * n <= dim; ++n) {
        sum += std::pow(a, n) * factorial(i + 2 * n) /
               (std::pow(4.0 * kPi, n) * factorial(n) * factorial(i)) *
               src[static_cast<std::size_t>(i + 2 * n)];
      }
      dst[static_cast<std::size_t>(i)] = sum;
    }
    return dst;
  };
  LkcVector out;
  out.dim = dim;
  out.values = convert(alpha.values);
  for (const auto& [label, contrib] : alpha.breakdown) out.breakdown[label] = convert(contrib);
  out.truncated = alpha.truncated;
  out.lowest_valid = alpha.lowest_valid;
  return out;
}

LkcVector scale_space_lkcs(const KernelMoments& moments, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule) {
  return lkcs_from_alpha(scale_alpha_lkcs(moments, geom, range, rule), moments.kappa);
}

LkcVector scale_space_lkcs(double gamma, double kappa, const DomainGeometry& geom,
                           const ScaleRange& range, MuRule rule) {
  return lkcs_from_alpha(scale_alpha_lkcs(gamma, kappa, geom, range, rule), kappa);
}

TopTwo scale_top_two(const KernelMoments& moments, const DomainGeometry& geom,
                     const ScaleRange& range) {
  validate_scale_range(range);
  if (geom.dimension != moments.N) {
    raise(ErrorCode::kDimensionMismatch, "kernel and domain dimensions differ");
  }
  const int N = moments.N;
  const double n = N;
  const double g = moments.gamma;
  const double ct = moments.ctilde;
  const double s1 = range.sigma_low;
  const double s2 = range.sigma_high;
  const double vol = geom.volume;
  const double bdry = geom.boundary_measure;

  TopTwo out;
  out.top = ct * std::pow(g, n / 2.0) * vol * (std::pow(s1, -n) - std::pow(s2, -n)) / (n / 2.0);
  const double band = (N == 1)
                          ? 2.0 * std::log(s2 / s1)
                          : (std::pow(s1, -(n - 1.0)) - std::pow(s2, -(n - 1.0))) / ((n - 1.0) / 2.0);
  out.second = 0.5 * (ct * std::pow(g, (n - 1.0) / 2.0) * bdry * band +
                      std::pow(g, n / 2.0) * vol * (std::pow(s1, -n) + std::pow(s2, -n)));
  return out;
}

}  // namespace lkcfield

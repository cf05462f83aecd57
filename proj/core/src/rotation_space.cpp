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

#include "lkcfield/rotation_space.hpp"

#include <algorithm>
#include <numbers>
#include <numeric>

#include <boost/math/special_functions/ellint_2.hpp>

#include "lkcfield/errors.hpp"
#include "lkcfield/parallel.hpp"
#include "lkcfield/quadrature.hpp"

namespace lkcfield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kHaarTag = 0x6861617200000000ull;
constexpr std::uint64_t kRTag = 0x72736d7000000000ull;

double abs_vandermonde(std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= std::abs(x[j] - x[i]);
  }
  return v;
}

// Cubature over lo <= l_1 <= ... <= l_dim <= hi in log coordinates; the
// points are returned as eigenvalues and the weights include the Jacobian.
SimplexCubature log_simplex(int dim, double lo, double hi, int nodes, int panels) {
  auto cub = ordered_simplex_cubature(dim, std::log(lo), std::log(hi), nodes, panels);
  for (std::size_t i = 0; i < cub.size(); ++i) {
    double jac = 1.0;
    for (int d = 0; d < dim; ++d) {
      double& t = cub.points[i * static_cast<std::size_t>(dim) + static_cast<std::size_t>(d)];
      t = std::exp(t);
      jac *= t;
    }
    cub.weights[i] *= jac;
  }
  return cub;
}

void check_moments(const RotationParams& p, const KernelMoments& m) {
  validate_rotation_params(p);
  if (m.N != p.N) raise(ErrorCode::kDimensionMismatch, "kernel and rotation dimensions differ");
}

double prod_pow(std::span<const double> x, double p) {
  double v = 1.0;
  for (double xi : x) v *= std::pow(xi, p);
  return v;
}

// All (N-1)-minors of the first N-1 rows of Q: entry c is the squared
// determinant with column c removed.
std::vector<double> leading_minors_sq(const Eigen::MatrixXd& Q) {
  const int N = static_cast<int>(Q.rows());
  const int j = N - 1;
  std::vector<double> out(static_cast<std::size_t>(N));
  for (int c = 0; c < N; ++c) {
    Eigen::MatrixXd sub(j, j);
    for (int r = 0; r < j; ++r) {
      int cc = 0;
      for (int k = 0; k < N; ++k) {
        if (k == c) continue;
        sub(r, cc++) = Q(r, k);
      }
    }
    const double d = sub.determinant();
    out[static_cast<std::size_t>(c)] = d * d;
  }
  return out;
}

}  // namespace

void validate_rotation_params(const RotationParams& p) {
  if (p.N < 1) raise(ErrorCode::kUnsupportedDimension, "rotation space needs N >= 1");
  if (!(p.sigma1 > 0.0) || !std::isfinite(p.sigma2)) {
    raise(ErrorCode::kInvalidArgument, "sigma bounds must be positive and finite");
  }
  if (p.sigma1 > p.sigma2) raise(ErrorCode::kInvalidArgument, "sigma1 must not exceed sigma2");
}

Eigen::MatrixXd haar_orthogonal_sample(int N, Rng& rng) {
  if (N < 1) raise(ErrorCode::kUnsupportedDimension, "Haar sample needs N >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd G(N, N);
  for (int c = 0; c < N; ++c) {
    for (int r = 0; r < N; ++r) G(r, c) = gauss(rng);
  }
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(G);
  Eigen::MatrixXd Q = qr.householderQ();
  const Eigen::MatrixXd R = qr.matrixQR();
  for (int c = 0; c < N; ++c) {
    if (R(c, c) < 0.0) Q.col(c) *= -1.0;
  }
  return Q;
}

McValue r_function(const Eigen::MatrixXd& S, int j, std::uint64_t samples,
                   std::uint64_t seed, unsigned threads) {
  const int N = static_cast<int>(S.rows());
  if (S.cols() != N) raise(ErrorCode::kDimensionMismatch, "S must be square");
  if (j < 0 || j > N) raise(ErrorCode::kIndexOutOfRange, "block size must lie in 0..N");
  if (j == 0) return {1.0, 0.0, samples};
  if (j == N) return {std::sqrt(std::abs(S.determinant())), 0.0, samples};
  if (samples < 2) raise(ErrorCode::kInvalidArgument, "need at least two Haar samples");

  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<double> sum(blocks, 0.0);
  std::vector<double> sum_sq(blocks, 0.0);
  parallel_for(blocks, threads, [&](std::size_t b) {
    Rng rng = substream(seed, b, kHaarTag);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min<std::uint64_t>(samples, begin + kSamplesPerBlock);
    double s = 0.0;
    double s2 = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const Eigen::MatrixXd Q = haar_orthogonal_sample(N, rng);
      const Eigen::MatrixXd C = Q * S * Q.transpose();
      const double v = std::sqrt(std::abs(C.topLeftCorner(j, j).determinant()));
      s += v;
      s2 += v * v;
    }
    sum[b] = s;
    sum_sq[b] = s2;
  });
  const double n = static_cast<double>(samples);
  const double mean = std::accumulate(sum.begin(), sum.end(), 0.0) / n;
  const double m2 = std::accumulate(sum_sq.begin(), sum_sq.end(), 0.0) / n;
  const double var = std::max(0.0, (m2 - mean * mean) * n / (n - 1.0));
  return {mean, std::sqrt(var / n), samples};
}

double elliptic_e(double m) {
  if (!(m <= 1.0)) raise(ErrorCode::kInvalidArgument, "elliptic parameter must be <= 1");
  if (m >= 0.0) return boost::math::ellint_2(std::sqrt(m));
  // Imaginary modulus: E(m) = sqrt(1 - m) E(m / (m - 1)).
  return std::sqrt(1.0 - m) * boost::math::ellint_2(std::sqrt(m / (m - 1.0)));
}

double r1_closed_form(double l1, double l2) {
  if (!(l1 > 0.0) || !(l2 > 0.0)) raise(ErrorCode::kInvalidArgument, "eigenvalues must be positive");
  return 2.0 / kPi * std::sqrt(l1) * elliptic_e(1.0 - l2 / l1);
}

double r1_squared_ratio_form(double l1, double l2) {
  const double y = (l1 * l1 - l2 * l2) / (l1 * l1);
  if (y * y > 1.0) return std::nan("");
  return kPi * l1 * elliptic_e(y * y) / 2.0;
}

double f_integral_KN(const RotationParams& p, const KernelMoments& m, const RotationOptions& opts) {
  check_moments(p, m);
  if (p.sigma1 == p.sigma2) return 0.0;
  const auto cub = log_simplex(p.N, p.lam_lo(), p.lam_hi(), opts.nodes_per_axis, opts.panels);
  double total = 0.0;
  for (std::size_t i = 0; i < cub.size(); ++i) {
    const auto x = cub.point(i);
    total += cub.weights[i] * abs_vandermonde(x) * prod_pow(x, -p.N / 2.0);
  }
  return m.c_big * total;
}

McValue f_integral_KNm1(const RotationParams& p, const KernelMoments& m,
                        const RotationOptions& opts) {
  check_moments(p, m);
  if (p.sigma1 == p.sigma2) return {0.0, 0.0, 0};
  const int N = p.N;
  const bool mc = N >= 3;
  const auto cub = log_simplex(N, p.lam_lo(), p.lam_hi(),
                               mc ? opts.mc_nodes_per_axis : opts.nodes_per_axis,
                               mc ? opts.mc_panels : opts.panels);
  std::vector<double> base(cub.size());
  for (std::size_t i = 0; i < cub.size(); ++i) {
    const auto x = cub.point(i);
    base[i] = cub.weights[i] * abs_vandermonde(x) * prod_pow(x, -(N + 1) / 2.0);
  }
  if (!mc) {
    double total = 0.0;
    for (std::size_t i = 0; i < cub.size(); ++i) {
      const auto x = cub.point(i);
      const double r = (N == 1) ? 1.0 : r1_closed_form(x[0], x[1]);
      total += base[i] * r;
    }
    return {m.c_big * total, 0.0, 0};
  }

  // Common Haar samples at every node: det of the leading (N-1) block of
  // Q diag(l) Q' expands by Cauchy-Binet into the column-deleted minors.
  const std::uint64_t S = opts.r_samples;
  if (S < 2) raise(ErrorCode::kInvalidArgument, "need at least two Haar samples");
  const std::uint64_t blocks = (S + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<double> per_sample(S, 0.0);
  parallel_for(blocks, opts.threads, [&](std::size_t b) {
    Rng rng = substream(opts.seed, b, kRTag);
    const std::uint64_t begin = b * kSamplesPerBlock;
    const std::uint64_t end = std::min<std::uint64_t>(S, begin + kSamplesPerBlock);
    for (std::uint64_t s = begin; s < end; ++s) {
      const auto minors = leading_minors_sq(haar_orthogonal_sample(N, rng));
      double acc = 0.0;
      for (std::size_t i = 0; i < cub.size(); ++i) {
        const auto x = cub.point(i);
        const double all = std::accumulate(x.begin(), x.end(), 1.0, std::multiplies<>());
        double det = 0.0;
        for (int c = 0; c < N; ++c) det += minors[static_cast<std::size_t>(c)] * all / x[static_cast<std::size_t>(c)];
        acc += base[i] * std::sqrt(det);
      }
      per_sample[s] = acc;
    }
  });
  const double n = static_cast<double>(S);
  double mean = 0.0;
  for (double v : per_sample) mean += v;
  mean /= n;
  double var = 0.0;
  for (double v : per_sample) var += (v - mean) * (v - mean);
  var /= (n - 1.0);
  return {m.c_big * mean, m.c_big * std::sqrt(var / n), S};
}

double f_integral_Km1N(const RotationParams& p, const KernelMoments& m,
                       const RotationOptions& opts) {
  check_moments(p, m);
  if (p.sigma1 == p.sigma2) return 0.0;
  const int N = p.N;
  // The boundary stratum is the two endpoint matrices.
  if (N == 1) return 1.0 / p.sigma1 + 1.0 / p.sigma2;
  const double a = p.lam_lo();
  const double b = p.lam_hi();
  const auto cub = log_simplex(N - 1, a, b, opts.nodes_per_axis, opts.panels);
  double total = 0.0;
  for (std::size_t i = 0; i < cub.size(); ++i) {
    const auto x = cub.point(i);
    double low = 1.0;
    double high = 1.0;
    for (double l : x) {
      low *= std::abs(l - a);
      high *= std::abs(b - l);
    }
    const double pin = std::pow(p.sigma2, N - 2) * low + std::pow(p.sigma1, N - 2) * high;
    total += cub.weights[i] * abs_vandermonde(x) * prod_pow(x, -N / 2.0) * pin;
  }
  return m.c_big / m.d_big * total;
}

RotationTopTwo lkc_rotation_top_two(const RotationParams& p, const KernelMoments& m,
                                    const DomainGeometry& geom, const RotationOptions& opts) {
  check_moments(p, m);
  if (geom.dimension != p.N) raise(ErrorCode::kDimensionMismatch, "domain and rotation dimensions differ");
  RotationTopTwo out;
  out.D = p.D();
  out.F_KN = f_integral_KN(p, m, opts);
  const McValue fk = f_integral_KNm1(p, m, opts);
  out.F_KNm1 = fk.value;
  out.F_KNm1_se = fk.standard_error;
  out.F_Km1N = f_integral_Km1N(p, m, opts);
  const double n = p.N;
  const double gv = std::pow(m.gamma, n / 2.0) * geom.volume;
  const double gb = std::pow(m.gamma, (n - 1.0) / 2.0) * geom.boundary_measure;
  out.L_D = gv * out.F_KN;
  out.L_Dm1 = 0.5 * (gb * out.F_KNm1 + gv * out.F_Km1N);
  out.L_Dm1_se = 0.5 * gb * out.F_KNm1_se;
  return out;
}

LkcVector rotation_lkc_vector(const RotationTopTwo& top) {
  LkcVector v;
  v.dim = top.D;
  v.values.assign(static_cast<std::size_t>(top.D) + 1, 0.0);
  v.values[static_cast<std::size_t>(top.D)] = top.L_D;
  v.values[static_cast<std::size_t>(top.D) - 1] = top.L_Dm1;
  v.truncated = true;
  v.lowest_valid = top.D - 1;
  return v;
}

double goe_pushforward_density(std::span<const double> lambda) {
  const int N = static_cast<int>(lambda.size());
  if (N < 1) raise(ErrorCode::kUnsupportedDimension, "need at least one eigenvalue");
  for (std::size_t i = 1; i < lambda.size(); ++i) {
    if (lambda[i] < lambda[i - 1]) raise(ErrorCode::kUnorderedInput, "eigenvalues must be ascending");
  }
  const double n = N;
  double log_c = -0.5 * n * std::log(2.0 * kPi) - n * (n + 1.0) / 4.0 * std::log(2.0);
  for (int j = 1; j <= N; ++j) log_c += std::lgamma(0.5) - std::lgamma(j / 2.0);
  double sq = 0.0;
  for (double l : lambda) sq += l * l;
  return std::exp(log_c - 0.25 * sq) * abs_vandermonde(lambda);
}

Eigen::MatrixXd sample_goe_matrix(int N, Rng& rng) {
  if (N < 1) raise(ErrorCode::kUnsupportedDimension, "GOE sample needs N >= 1");
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(N, N);
  for (int r = 0; r < N; ++r) {
    A(r, r) = std::sqrt(2.0) * gauss(rng);
    for (int c = r + 1; c < N; ++c) {
      A(r, c) = gauss(rng);
      A(c, r) = A(r, c);
    }
  }
  return A;
}

std::vector<double> sample_goe_eigenvalues(int N, Rng& rng) {
  const Eigen::MatrixXd A = sample_goe_matrix(N, rng);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  const Eigen::VectorXd ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

}  // namespace lkcfield

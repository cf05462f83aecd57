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

#include "lkcfield/gkf.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/tools/roots.hpp>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"

namespace lkcfield {

namespace {

constexpr double kPi = std::numbers::pi;

// Mills ratio by continued fraction (modified Lentz), for large x.
double mills_continued_fraction(double x) {
  const double tiny = 1e-300;
  double f = x;
  double c = x;
  double d = 0.0;
  for (int k = 1; k < 500; ++k) {
    d = x + k * d;
    d = (d == 0.0) ? tiny : 1.0 / d;
    c = x + k / c;
    if (c == 0.0) c = tiny;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 / f;
}

// sum_j (2 pi)^{-j/2} L_j H_j(u), the polynomial behind the derivative.
double slope_poly(const LkcVector& lkcs, double u) {
  double sum = 0.0;
  for (std::size_t j = 0; j < lkcs.values.size(); ++j) {
    sum += std::pow(2.0 * kPi, -static_cast<double>(j) / 2.0) * lkcs.values[j] *
           hermite(static_cast<int>(j), u);
  }
  return sum;
}

// Monomial coefficients of sum_j c_j H_{j + shift}(u).
std::vector<double> hermite_series_monomials(const std::vector<double>& c, int shift) {
  std::vector<double> out;
  std::vector<double> h0{1.0};
  std::vector<double> h1{0.0, 1.0};
  auto add = [&out](const std::vector<double>& h, double w) {
    if (out.size() < h.size()) out.resize(h.size(), 0.0);
    for (std::size_t i = 0; i < h.size(); ++i) out[i] += w * h[i];
  };
  for (std::size_t j = 0; j < c.size(); ++j) {
    const int n = static_cast<int>(j) + shift;
    if (n < 0) continue;
    std::vector<double> a = h0;
    std::vector<double> b = h1;
    if (n == 0) {
      add(a, c[j]);
      continue;
    }
    for (int k = 1; k < n; ++k) {
      std::vector<double> next(b.size() + 1, 0.0);
      for (std::size_t i = 0; i < b.size(); ++i) next[i + 1] += b[i];
      for (std::size_t i = 0; i < a.size(); ++i) next[i] -= k * a[i];
      a = std::move(b);
      b = std::move(next);
    }
    add(b, c[j]);
  }
  return out;
}

// Cauchy bound on the real roots of a polynomial.
double cauchy_bound(const std::vector<double>& mono) {
  std::size_t deg = mono.size();
  while (deg > 0 && mono[deg - 1] == 0.0) --deg;
  if (deg <= 1) return 1.0;
  const double lead = mono[deg - 1];
  double m = 0.0;
  for (std::size_t i = 0; i + 1 < deg; ++i) m = std::max(m, std::abs(mono[i] / lead));
  return 1.0 + m;
}

// Real roots of both the slope polynomial and the polynomial part of the
// EEC expansion lie inside [-b, b].
double root_bound(const LkcVector& lkcs) {
  std::vector<double> c(lkcs.values.size());
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = std::pow(2.0 * kPi, -static_cast<double>(j) / 2.0) * lkcs.values[j];
  }
  std::vector<double> tail = c;
  if (!tail.empty()) tail[0] = 0.0;
  return std::max(cauchy_bound(hermite_series_monomials(c, 0)),
                  cauchy_bound(hermite_series_monomials(tail, -1))) + 1.0;
}

template <class F>
double last_sign_change(F&& f, double lo, double hi) {
  const int steps = std::max(20000, static_cast<int>(std::min(2e6, 200.0 * (hi - lo))));
  const double h = (hi - lo) / steps;
  double x1 = hi;
  double f1 = f(x1);
  for (int k = 1; k <= steps; ++k) {
    const double x0 = hi - k * h;
    const double f0 = f(x0);
    if ((f0 > 0.0) != (f1 > 0.0)) {
      std::uintmax_t iters = 200;
      auto tol = boost::math::tools::eps_tolerance<double>(52);
      auto r = boost::math::tools::toms748_solve(f, x0, x1, f0, f1, tol, iters);
      return 0.5 * (r.first + r.second);
    }
    x1 = x0;
    f1 = f0;
  }
  return -std::numeric_limits<double>::infinity();
}

}  // namespace

double gaussian_density(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

double gaussian_tail(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double hermite(int n, double x) {
  if (n < -1) raise(ErrorCode::kIndexOutOfRange, "Hermite index must be >= -1");
  if (n == -1) {
    if (x > 8.0) return mills_continued_fraction(x);
    return gaussian_tail(x) / gaussian_density(x);
  }
  if (n == 0) return 1.0;
  double h0 = 1.0;
  double h1 = x;
  for (int k = 1; k < n; ++k) {
    const double h2 = x * h1 - k * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

double flag_coefficient(int n, int j) {
  if (n < 0 || j < 0 || j > n) raise(ErrorCode::kIndexOutOfRange, "flag coefficient needs 0 <= j <= n");
  return boost::math::binomial_coefficient<double>(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
         unit_ball_volume(n) / (unit_ball_volume(n - j) * unit_ball_volume(j));
}

double gaussian_minkowski(int j, double u) {
  if (j < 0) raise(ErrorCode::kIndexOutOfRange, "Minkowski index must be >= 0");
  if (j == 0) return gaussian_tail(u);
  return hermite(j - 1, u) * gaussian_density(u);
}

double expected_ec(const LkcVector& lkcs, double u) {
  if (lkcs.values.empty()) return 0.0;
  double sum = lkcs.values[0] * gaussian_tail(u);
  const double e = std::exp(-0.5 * u * u);
  for (std::size_t j = 1; j < lkcs.values.size(); ++j) {
    sum += std::pow(2.0 * kPi, -(static_cast<double>(j) + 1.0) / 2.0) * lkcs.values[j] *
           hermite(static_cast<int>(j) - 1, u) * e;
  }
  return sum;
}

double expected_ec_kinematic(const LkcVector& lkcs, double u) {
  double sum = 0.0;
  for (std::size_t j = 0; j < lkcs.values.size(); ++j) {
    const int jj = static_cast<int>(j);
    sum += flag_coefficient(jj, 0) * std::pow(2.0 * kPi, -jj / 2.0) * lkcs.values[j] *
           gaussian_minkowski(jj, u);
  }
  return sum;
}

double expected_ec_derivative(const LkcVector& lkcs, double u) {
  return -gaussian_density(u) * slope_poly(lkcs, u);
}

double monotone_onset(const LkcVector& lkcs) {
  const double b = root_bound(lkcs);
  return last_sign_change([&](double u) { return slope_poly(lkcs, u); }, -b, b);
}

double positivity_crossing(const LkcVector& lkcs) {
  const double b = root_bound(lkcs);
  // Scale out the Gaussian factor so the scan sees a polynomial-sized signal.
  auto g = [&](double u) { return expected_ec(lkcs, u) / gaussian_density(u); };
  // Below about -37 the Gaussian density underflows.
  return last_sign_change(g, std::max(-b, -35.0), b);
}

double threshold_for_level(const LkcVector& lkcs, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) raise(ErrorCode::kInvalidArgument, "alpha must lie in (0, 1)");
  double lo = monotone_onset(lkcs);
  if (!std::isfinite(lo)) {
    lo = -root_bound(lkcs);
    while (expected_ec(lkcs, lo) <= alpha && lo > -1e3) lo *= 2.0;
  }
  const double top = expected_ec(lkcs, lo);
  if (!(alpha < top)) {
    std::ostringstream os;
    os.precision(17);
    os << "alpha " << alpha << " is not below the curve value " << top
       << " at the monotone onset u = " << lo;
    raise(ErrorCode::kLevelNotAttainable, os.str());
  }
  double hi = std::max(lo, 0.0) + 1.0;
  while (expected_ec(lkcs, hi) > alpha) hi += 1.0;
  auto f = [&](double u) { return expected_ec(lkcs, u) - alpha; };
  std::uintmax_t iters = 300;
  auto tol = boost::math::tools::eps_tolerance<double>(53);
  auto r = boost::math::tools::toms748_solve(f, lo, hi, f(lo), f(hi), tol, iters);
  return 0.5 * (r.first + r.second);
}

EecCurve eec_curve(const LkcVector& lkcs, const std::vector<double>& thresholds) {
  for (std::size_t i = 1; i < thresholds.size(); ++i) {
    if (!(thresholds[i] > thresholds[i - 1])) {
      raise(ErrorCode::kUnorderedInput, "threshold grid must be strictly ascending");
    }
  }
  EecCurve c;
  c.thresholds = thresholds;
  c.lkcs = lkcs;
  c.eec_values.reserve(thresholds.size());
  for (double u : thresholds) c.eec_values.push_back(expected_ec(lkcs, u));
  c.metadata["truncated"] = lkcs.truncated ? "true" : "false";
  return c;
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      raise(ErrorCode::kConfigInvalid, "bad grid '" + spec + "'");
    }
  }
  if (parts.size() != 3 || !(parts[2] > 0.0) || parts[1] < parts[0]) {
    raise(ErrorCode::kConfigInvalid, "grid must be start:stop:step with step > 0");
  }
  const double span = (parts[1] - parts[0]) / parts[2];
  const auto n = static_cast<long>(std::floor(span + 1e-9));
  if (n > 10'000'000) raise(ErrorCode::kConfigInvalid, "grid too large");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(n) + 1);
  for (long i = 0; i <= n; ++i) grid.push_back(parts[0] + static_cast<double>(i) * parts[2]);
  return grid;
}

}  // namespace lkcfield

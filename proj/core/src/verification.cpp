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

#include "lkcfield/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"
#include "lkcfield/gkf.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/parallel.hpp"
#include "lkcfield/quadrature.hpp"
#include "lkcfield/random.hpp"
#include "lkcfield/rotation_space.hpp"
#include "lkcfield/scale_space.hpp"
#include "lkcfield/simulation.hpp"

namespace lkcfield {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kGoeTag = 0x676f650000000000ull;
constexpr std::uint64_t kBootTag = 0x626f6f7400000000ull;

class Recorder {
 public:
  explicit Recorder(std::vector<CheckResult>& out) : out_(out) {}

  void abs(const std::string& suite, const std::string& name, double observed, double expected,
           double tol) {
    push(suite, name, observed, expected, tol, std::abs(observed - expected) <= tol, "abs");
  }
  void rel(const std::string& suite, const std::string& name, double observed, double expected,
           double tol) {
    const double scale = std::max(std::abs(expected), 1e-300);
    push(suite, name, observed, expected, tol, std::abs(observed - expected) <= tol * scale, "rel");
  }
  void se(const std::string& suite, const std::string& name, double observed, double expected,
          double standard_error) {
    push(suite, name, observed, expected, 3.0 * standard_error,
         std::abs(observed - expected) <= 3.0 * standard_error, "3se");
  }
  void flag(const std::string& suite, const std::string& name, bool ok, const std::string& detail) {
    CheckResult r;
    r.suite = suite;
    r.name = name;
    r.passed = ok;
    r.observed = ok ? 1.0 : 0.0;
    r.expected = 1.0;
    r.detail = detail;
    out_.push_back(r);
  }
  void add(CheckResult r) { out_.push_back(std::move(r)); }
  void error(const std::string& suite, const std::string& name, const std::exception& e) {
    flag(suite, name, false, e.what());
  }

 private:
  void push(const std::string& suite, const std::string& name, double observed, double expected,
            double tol, bool ok, const char* kind) {
    CheckResult r{suite, name, ok, observed, expected, tol, kind};
    out_.push_back(r);
  }
  std::vector<CheckResult>& out_;
};

void kernel_suite(Recorder& rec) {
  const std::string s = "kernel";
  for (int N = 1; N <= 3; ++N) {
    const auto g = compute_moments(make_gaussian_kernel(N));
    const auto m = compute_moments(make_marr_kernel(N));
    const std::string n = "N=" + std::to_string(N);
    rec.abs(s, "gamma gaussian " + n, g.gamma, 0.5, 1e-6);
    rec.abs(s, "gamma marr " + n, m.gamma, (N + 4.0) / (2.0 * N), 1e-6);
    rec.abs(s, "kappa4-3kappa22 gaussian " + n, g.kappa4_residual, 0.0, 1e-7);
    rec.abs(s, "kappa4-3kappa22 marr " + n, m.kappa4_residual, 0.0, 1e-7);
    rec.abs(s, "1/16+rho/2+kappa22 gaussian " + n, 1.0 / 16.0 + g.rho / 2.0 + g.kappa22, 0.0, 1e-8);
    rec.abs(s, "kappa_direct=4ctilde^2 gaussian " + n, g.kappa_direct, 4.0 * g.ctilde * g.ctilde, 1e-6);
    rec.abs(s, "kappa_direct=4ctilde^2 marr " + n, m.kappa_direct, 4.0 * m.ctilde * m.ctilde, 1e-6);
    rec.abs(s, "kappa22 gaussian " + n, g.kappa22, 1.0 / 16.0, 1e-8);
  }
  const auto g1 = compute_moments(make_gaussian_kernel(1));
  const auto m1 = compute_moments(make_marr_kernel(1));
  rec.abs(s, "c_big=ctilde gaussian N=1", g1.c_big, g1.ctilde, 1e-8);
  rec.abs(s, "c_big=ctilde marr N=1", m1.c_big, m1.ctilde, 1e-8);

  // Radial reduction against a tensor rule on [-12, 12]^2.
  const auto k = make_marr_kernel(2);
  const auto mm = compute_moments(k);
  auto box = [&](auto&& g) {
    return integrate_box(2, -12.0, 12.0, [&](std::span<const double> u) { return g(u[0], u[1]); }, 24, 16);
  };
  const double gamma_box = 4.0 * box([&](double x, double y) {
    const double d = k.derivative(x * x + y * y);
    return d * d * x * x;
  });
  const double k22_box = box([&](double x, double y) {
    const double d = k.derivative(x * x + y * y);
    return d * d * x * x * y * y;
  });
  rec.abs(s, "radial vs tensor gamma marr N=2", mm.gamma, gamma_box, 1e-6);
  rec.abs(s, "radial vs tensor kappa22 marr N=2", mm.kappa22, k22_box, 1e-6);
}

void domain_suite(Recorder& rec, const VerifyOptions& o) {
  const std::string s = "domain";
  const auto sq = rectangle_geometry({1.0, 1.0});
  const auto disk = ball_geometry(2, 1.0);
  rec.abs(s, "ball N=2 L1", disk.euclid_lkcs[1], kPi, 1e-12);
  rec.abs(s, "rect [1,2] L1", rectangle_geometry({1.0, 2.0}).euclid_lkcs[1], 3.0, 1e-12);
  std::uint64_t stream = 0;
  for (const auto* g : {&sq, &disk}) {
    for (double rho : {0.05, 0.1, 0.2}) {
      const auto est = tube_volume_estimate(*g, rho, 1'000'000, o.seed + stream++, o.threads);
      std::ostringstream name;
      name << "steiner " << shape_name(g->shape) << " rho=" << rho;
      rec.se(s, name.str(), est.value, steiner_tube_volume(*g, rho), est.standard_error);
    }
  }
  const auto big = rectangle_geometry({3.0, 6.0, 9.0});
  const auto small = rectangle_geometry({1.0, 2.0, 3.0});
  bool ok = true;
  for (int j = 0; j <= 3; ++j) {
    ok = ok && std::abs(big.euclid_lkcs[static_cast<std::size_t>(j)] -
                        std::pow(3.0, j) * small.euclid_lkcs[static_cast<std::size_t>(j)]) <=
                   1e-12 * big.euclid_lkcs[static_cast<std::size_t>(j)];
  }
  rec.flag(s, "rectangle scaling c^j", ok, "");
}

void scale_suite(Recorder& rec) {
  const std::string s = "scale";
  for (int k = 0; k <= 10; ++k) {
    const double mu = mu_moment(k);
    const double q = integrate_adaptive(
                         [k](double z) { return std::pow(z, k) * gaussian_density(z); }, 0.0, 40.0,
                         1e-13 * std::max(1.0, mu))
                         .value;
    rec.abs(s, "mu_" + std::to_string(k) + " quadrature", mu, q, 1e-12 * std::max(1.0, mu));
    if (k % 2 == 0) {
      rec.abs(s, "mu_" + std::to_string(k) + " even closed form", mu, mu_moment_halved_odd(k), 1e-12);
    }
  }
  const std::vector<ScaleRange> ranges = {{0.5, 2.0}, {1.0, 3.0}};
  for (int N = 1; N <= 3; ++N) {
    for (const char* kn : {"gaussian", "marr"}) {
      const auto m = compute_moments(make_named_kernel(kn, N));
      std::vector<double> sides;
      for (int d = 0; d < N; ++d) sides.push_back(1.0 + d);
      for (const auto& geom : {rectangle_geometry(sides), ball_geometry(N, 1.5)}) {
        for (const auto& r : ranges) {
          const auto L = scale_space_lkcs(m, geom, r);
          const auto t = scale_top_two(m, geom, r);
          std::ostringstream tag;
          tag << kn << " N=" << N << " " << shape_name(geom.shape) << " [" << r.sigma_low << ","
              << r.sigma_high << "]";
          rec.rel(s, "pipeline L_{N+1} " + tag.str(), L.values[static_cast<std::size_t>(N) + 1], t.top, 1e-10);
          rec.rel(s, "pipeline L_N " + tag.str(), L.values[static_cast<std::size_t>(N)], t.second, 1e-10);
          rec.abs(s, "L_0 = 1 " + tag.str(), L.values[0], 1.0, 1e-10);
        }
      }
      const auto geom = rectangle_geometry(sides);
      const double whole = scale_space_lkcs(m, geom, {0.5, 2.0}).values.back();
      const double parts = scale_space_lkcs(m, geom, {0.5, 1.1}).values.back() +
                           scale_space_lkcs(m, geom, {1.1, 2.0}).values.back();
      rec.rel(s, std::string("additivity L_{N+1} ") + kn + " N=" + std::to_string(N), parts, whole, 1e-12);
      bool mono = true;
      double prev = 0.0;
      for (double lo = 1.9; lo > 0.2; lo -= 0.1) {
        const double v = scale_top_two(m, geom, {lo, 2.0}).top;
        mono = mono && v > prev;
        prev = v;
      }
      rec.flag(s, std::string("monotone in sigma_low ") + kn + " N=" + std::to_string(N), mono, "");
    }
  }
  const auto m1 = compute_moments(make_gaussian_kernel(1));
  rec.abs(s, "N=1 [0,1] sigma [0.5,1] L_2", scale_top_two(m1, rectangle_geometry({1.0}), {0.5, 1.0}).top, 0.5,
          1e-12);
}

void rotation_suite(Recorder& rec, const VerifyOptions& o) {
  const std::string s = "rotation";
  for (const char* kn : {"gaussian", "marr"}) {
    const auto m = compute_moments(make_named_kernel(kn, 1));
    const RotationParams p{1, 0.5, 2.0};
    const double scale_f11 = m.ctilde * (1.0 / p.sigma1 - 1.0 / p.sigma2) / 0.5;
    const double scale_f10 = m.ctilde * 2.0 * std::log(p.sigma2 / p.sigma1);
    const double scale_f01 = 1.0 / p.sigma1 + 1.0 / p.sigma2;
    rec.rel(s, std::string("N=1 F_KN ") + kn, f_integral_KN(p, m), scale_f11, 1e-8);
    rec.rel(s, std::string("N=1 F_KNm1 ") + kn, f_integral_KNm1(p, m).value, scale_f10, 1e-8);
    rec.rel(s, std::string("N=1 F_Km1N ") + kn, f_integral_Km1N(p, m), scale_f01, 1e-8);
    const auto geom = rectangle_geometry({10.0});
    const auto rot = lkc_rotation_top_two(p, m, geom);
    const auto sc = scale_top_two(m, geom, {p.sigma1, p.sigma2});
    rec.rel(s, std::string("N=1 rotation = scale L_D ") + kn, rot.L_D, sc.top, 1e-8);
    rec.rel(s, std::string("N=1 rotation = scale L_D-1 ") + kn, rot.L_Dm1, sc.second, 1e-8);
  }
  const auto m2 = compute_moments(make_gaussian_kernel(2));
  const auto unit = rectangle_geometry({1.0, 1.0});
  for (auto [s1, s2] : {std::pair{1.0, 2.0}, {0.5, 1.0}, {1.0, 4.0}}) {
    const double r = s1 / s2;
    const double target = std::pow(2.0, -4) * kPi / (s1 * s1) * (r * r - 1.0 - (r * r + 1.0) * std::log(r));
    const auto top = lkc_rotation_top_two({2, s1, s2}, m2, unit);
    std::ostringstream name;
    name << "N=2 L5 closed form (" << s1 << "," << s2 << ")";
    rec.rel(s, name.str(), top.L_D, target, 1e-3);
    const double first = std::pow(2.0, -3.5) * kPi / (s1 * s1) * (r * r - 1.0) * std::log(r);
    std::ostringstream name4;
    name4 << "N=2 L4 interior term (" << s1 << "," << s2 << ")";
    rec.rel(s, name4.str(), 0.5 * m2.gamma * top.F_Km1N, first, 1e-8);
  }
  Eigen::MatrixXd S(2, 2);
  S << 0.3, 0.0, 0.0, 1.0;
  const auto R = r_function(S, 1, 200'000, o.seed, o.threads);
  rec.se(s, "R_1 Haar MC vs elliptic closed form", R.value, r1_closed_form(0.3, 1.0), R.standard_error);
  Rng rng = substream(o.seed, 0, 99);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Eigen::MatrixXd A(3, 3);
  for (int i = 0; i < 9; ++i) A(i / 3, i % 3) = gauss(rng);
  Eigen::MatrixXd spd = A * A.transpose() + Eigen::MatrixXd::Identity(3, 3);
  rec.rel(s, "R_N = |S|^{1/2}", r_function(spd, 3, 10, o.seed).value, std::sqrt(spd.determinant()), 1e-12);
  const auto goe = goe_histogram_check(100'000, o.seed, 200, o.threads);
  CheckResult gr{s, "GOE(2) histogram L1 within 3 bootstrap sd", goe.passed, goe.l1,
                 goe.bootstrap_mean, 3.0 * goe.bootstrap_sd, "bootstrap"};
  rec.add(gr);
}

void gkf_suite(Recorder& rec) {
  const std::string s = "gkf";
  LkcVector point;
  point.dim = 0;
  point.values = {1.0};
  double worst = 0.0;
  for (double u = -3.0; u <= 8.0; u += 0.25) {
    worst = std::max(worst, std::abs(expected_ec(point, u) - gaussian_tail(u)) /
                                std::max(gaussian_tail(u), 1e-300));
  }
  rec.abs(s, "single point EEC = tail (max rel err)", worst, 0.0, 1e-12);
  const auto m1 = compute_moments(make_gaussian_kernel(1));
  const auto L = scale_space_lkcs(m1, rectangle_geometry({10.0}), {0.5, 2.0});
  for (double a : {0.1, 0.05, 0.01}) {
    const double u = threshold_for_level(L, a);
    rec.abs(s, "threshold round trip alpha=" + std::to_string(a), expected_ec(L, u), a, 1e-9);
  }
  double herr = 0.0;
  double kin = 0.0;
  double der = 0.0;
  for (double x = -4.0; x <= 4.0; x += 0.125) {
    herr = std::max(herr, std::abs(hermite(2, x) - (x * x - 1.0)));
    herr = std::max(herr, std::abs(hermite(3, x) - (x * x * x - 3.0 * x)));
    kin = std::max(kin, std::abs(expected_ec(L, x) - expected_ec_kinematic(L, x)));
  }
  for (double u = 1.0; u <= 4.0; u += 0.25) {
    const double h = 1e-5;
    const double fd = (expected_ec(L, u + h) - expected_ec(L, u - h)) / (2.0 * h);
    const double an = expected_ec_derivative(L, u);
    der = std::max(der, std::abs(fd - an) / std::abs(an));
  }
  rec.abs(s, "Hermite explicit forms", herr, 0.0, 1e-12);
  rec.abs(s, "EEC direct = kinematic assembly", kin, 0.0, 1e-12);
  rec.abs(s, "EEC derivative vs finite difference (rel)", der, 0.0, 1e-6);
  rec.abs(s, "flag [2 1]", flag_coefficient(2, 1), kPi / 2.0, 1e-14);
}

void simulation_suite(Recorder& rec, const VerifyOptions& o) {
  const std::string s = "simulation";
  const auto kernel = make_gaussian_kernel(1);
  const auto m1 = compute_moments(kernel);
  GridSpec spec;
  spec.extent = {10.0};
  spec.range = {0.5, 2.0};
  const auto L = scale_space_lkcs(m1, rectangle_geometry({10.0}), spec.range);
  const std::vector<double> us = {2.0, 2.5, 3.0};
  const auto st = monte_carlo_eec(kernel, spec, us, o.realizations, o.seed, o.threads);
  for (std::size_t i = 0; i < us.size(); ++i) {
    rec.se(s, "MC mean chi vs EEC u=" + std::to_string(us[i]), st.mean_chi[i], expected_ec(L, us[i]),
           st.se_chi[i]);
  }
  const auto low = monte_carlo_eec(kernel, spec, {-10.0}, 100, o.seed, o.threads);
  rec.abs(s, "u=-10 mean chi", low.mean_chi[0], 1.0, 0.0);
  const auto one = monte_carlo_eec(kernel, spec, us, 200, o.seed, 1);
  const auto many = monte_carlo_eec(kernel, spec, us, 200, o.seed, 4);
  rec.flag(s, "thread-count independence", one.mean_chi == many.mean_chi && one.p_sup == many.p_sup, "");
}

}  // namespace

GoeHistogramCheck goe_histogram_check(std::uint64_t samples, std::uint64_t seed, int bootstrap,
                                      unsigned threads) {
  constexpr int kMid = 16;
  constexpr int kGap = 10;
  constexpr double kMidLo = -4.0;
  constexpr double kMidHi = 4.0;
  constexpr double kGapHi = 10.0;
  constexpr int kBins = kMid * kGap + 1;  // last bin collects the rest
  const double dm = (kMidHi - kMidLo) / kMid;
  const double dg = kGapHi / kGap;

  std::vector<double> expected(kBins, 0.0);
  double inside = 0.0;
  for (int a = 0; a < kMid; ++a) {
    for (int b = 0; b < kGap; ++b) {
      const double m0 = kMidLo + a * dm;
      const double g0 = b * dg;
      const double mass = integrate_box(
          2, 0.0, 1.0,
          [&](std::span<const double> t) {
            const double m = m0 + dm * t[0];
            const double g = g0 + dg * t[1];
            const double lam[2] = {m - g / 2.0, m + g / 2.0};
            return goe_pushforward_density(lam) * dm * dg;
          },
          12, 1);
      expected[static_cast<std::size_t>(a * kGap + b)] = mass;
      inside += mass;
    }
  }
  expected[kBins - 1] = std::max(0.0, 1.0 - inside);

  auto bin_of = [&](double l1, double l2) {
    const double m = 0.5 * (l1 + l2);
    const double g = l2 - l1;
    const int a = static_cast<int>(std::floor((m - kMidLo) / dm));
    const int b = static_cast<int>(std::floor(g / dg));
    if (a < 0 || a >= kMid || b < 0 || b >= kGap) return kBins - 1;
    return a * kGap + b;
  };

  const std::uint64_t blocks = (samples + kSamplesPerBlock - 1) / kSamplesPerBlock;
  std::vector<int> labels(samples);
  parallel_for(blocks, threads, [&](std::size_t blk) {
    Rng rng = substream(seed, blk, kGoeTag);
    const std::uint64_t end = std::min<std::uint64_t>(samples, (blk + 1) * kSamplesPerBlock);
    for (std::uint64_t i = blk * kSamplesPerBlock; i < end; ++i) {
      const auto ev = sample_goe_eigenvalues(2, rng);
      labels[i] = bin_of(ev[0], ev[1]);
    }
  });
  std::vector<double> freq(kBins, 0.0);
  for (int l : labels) freq[static_cast<std::size_t>(l)] += 1.0;
  const double n = static_cast<double>(samples);
  for (double& f : freq) f /= n;

  GoeHistogramCheck out;
  out.samples = samples;
  for (int b = 0; b < kBins; ++b) out.l1 += std::abs(freq[static_cast<std::size_t>(b)] - expected[static_cast<std::size_t>(b)]);

  std::vector<double> boot(static_cast<std::size_t>(bootstrap));
  parallel_for(boot.size(), threads, [&](std::size_t r) {
    Rng rng = substream(seed, r, kBootTag);
    std::uniform_int_distribution<std::uint64_t> pick(0, samples - 1);
    std::vector<double> f(kBins, 0.0);
    for (std::uint64_t i = 0; i < samples; ++i) f[static_cast<std::size_t>(labels[pick(rng)])] += 1.0;
    double l1 = 0.0;
    for (int b = 0; b < kBins; ++b) l1 += std::abs(f[static_cast<std::size_t>(b)] / n - freq[static_cast<std::size_t>(b)]);
    boot[r] = l1;
  });
  double mean = 0.0;
  for (double v : boot) mean += v;
  mean /= static_cast<double>(boot.size());
  double var = 0.0;
  for (double v : boot) var += (v - mean) * (v - mean);
  var /= static_cast<double>(boot.size() - 1);
  out.bootstrap_mean = mean;
  out.bootstrap_sd = std::sqrt(var);
  out.passed = out.l1 <= mean + 3.0 * out.bootstrap_sd;
  return out;
}

std::vector<CheckResult> run_verification(const std::string& suite, const VerifyOptions& opts) {
  static const std::vector<std::string> known = {"kernel", "domain", "scale", "rotation", "gkf", "simulation"};
  if (suite != "all" && std::find(known.begin(), known.end(), suite) == known.end()) {
    raise(ErrorCode::kConfigInvalid, "unknown suite '" + suite + "'");
  }
  std::vector<CheckResult> out;
  Recorder rec(out);
  auto run = [&](const std::string& name, auto&& fn) {
    if (suite != "all" && suite != name) return;
    try {
      fn();
    } catch (const std::exception& e) {
      rec.error(name, "suite raised", e);
    }
  };
  run("kernel", [&] { kernel_suite(rec); });
  run("domain", [&] { domain_suite(rec, opts); });
  run("scale", [&] { scale_suite(rec); });
  run("rotation", [&] { rotation_suite(rec, opts); });
  run("gkf", [&] { gkf_suite(rec); });
  run("simulation", [&] { simulation_suite(rec, opts); });
  return out;
}

}  // namespace lkcfield

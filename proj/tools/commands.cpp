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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lkcfield/domain.hpp"
#include "lkcfield/errors.hpp"
#include "lkcfield/gkf.hpp"
#include "lkcfield/json_io.hpp"
#include "lkcfield/kernel.hpp"
#include "lkcfield/rotation_space.hpp"
#include "lkcfield/scale_space.hpp"
#include "lkcfield/simulation.hpp"
#include "lkcfield/verification.hpp"

namespace lkcfield::cli {

namespace {

using Clock = std::chrono::system_clock;

std::string iso_time(Clock::time_point t) {
  const std::time_t tt = Clock::to_time_t(t);
  std::tm tm{};
  gmtime_r(&tt, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

// Keeps wall-clock data out of the artifact so reruns are byte-identical.
class ArtifactWriter {
 public:
  explicit ArtifactWriter(const RunConfig& cfg) : cfg_(cfg), started_(Clock::now()) {}

  void write(const std::string& text, const std::string& path_key = "out") const {
    if (!cfg_.has(path_key)) {
      std::cout << text;
      std::cout.flush();
      return;
    }
    const std::string path = cfg_.get_string(path_key);
    {
      std::ofstream out(path, std::ios::binary | std::ios::trunc);
      if (!out) raise(ErrorCode::kIoError, "cannot write '" + path + "'");
      out << text;
      if (!out) raise(ErrorCode::kIoError, "write to '" + path + "' failed");
    }
    const auto finished = Clock::now();
    Json meta = {{"artifact", path},
                 {"subcommand", cfg_.subcommand()},
                 {"started", iso_time(started_)},
                 {"finished", iso_time(finished)},
                 {"elapsed_seconds", std::chrono::duration<double>(finished - started_).count()},
                 {"threads", cfg_.threads()}};
    std::ofstream side(path + ".meta.json", std::ios::trunc);
    if (!side) raise(ErrorCode::kIoError, "cannot write sidecar for '" + path + "'");
    side << meta.dump(2) << '\n';
  }

  void write_json(const Json& doc, const std::string& path_key = "out") const {
    write(doc.dump(2) + "\n", path_key);
  }

 private:
  const RunConfig& cfg_;
  Clock::time_point started_;
};

std::string csv_number(double v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

DomainGeometry load_domain(const RunConfig& cfg) {
  return parse_domain_spec(cfg.get_string("domain"));
}

int resolve_dimension(const RunConfig& cfg, const DomainGeometry& geom) {
  if (!cfg.has("N")) return geom.dimension;
  const int N = cfg.get_int("N");
  if (N != geom.dimension) {
    raise(ErrorCode::kDimensionMismatch, "N = " + std::to_string(N) + " but the domain has dimension " +
                                             std::to_string(geom.dimension));
  }
  return N;
}

std::pair<double, double> sigma_pair(const RunConfig& cfg) {
  const auto s = cfg.get_list("sigma");
  if (s.size() != 2) raise(ErrorCode::kConfigInvalid, "sigma must be 'lo,hi'");
  return {s[0], s[1]};
}

QuadratureOptions quad_options(const RunConfig& cfg) {
  QuadratureOptions q;
  q.abs_tol = cfg.get_double("abs_tol");
  return q;
}

LkcVector load_lkcs(const RunConfig& cfg) {
  cfg.require_file("lkcs");
  const std::string path = cfg.get_string("lkcs");
  std::ifstream in(path);
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    raise(ErrorCode::kConfigInvalid, "'" + path + "' is not valid JSON: " + e.what());
  }
  return lkc_vector_from_document(doc);
}

}  // namespace

RunConfig make_config(const std::string& sub) {
  if (sub == "moments") {
    return RunConfig(sub, {{"kernel", "gaussian"}, {"N", 2}, {"abs_tol", 1e-10}},
                     {"kernel", "N", "abs_tol"});
  }
  if (sub == "lkc scale") {
    return RunConfig(sub, {{"kernel", "gaussian"}, {"abs_tol", 1e-10}, {"mu_rule", "integral"}},
                     {"kernel", "N", "domain", "sigma", "abs_tol", "mu_rule"});
  }
  if (sub == "lkc rotation") {
    return RunConfig(sub,
                     {{"kernel", "gaussian"}, {"abs_tol", 1e-10}, {"r_samples", 20000}, {"nodes", 24},
                      {"panels", 4}},
                     {"kernel", "N", "domain", "sigma", "abs_tol", "r_samples", "nodes", "panels", "seed"});
  }
  if (sub == "eec") return RunConfig(sub, {{"u_grid", "0:5:0.01"}}, {"lkcs", "u_grid"});
  if (sub == "threshold") return RunConfig(sub, Json::object(), {"lkcs", "alpha"});
  if (sub == "simulate") {
    return RunConfig(sub,
                     {{"kernel", "gaussian"}, {"N", 1}, {"reps", 2000}, {"spacing", 0.0},
                      {"scales_per_octave", 8}, {"padding", 5.0}},
                     {"kernel", "N", "T", "sigma", "u", "reps", "seed", "spacing", "scales_per_octave",
                      "padding", "csv"});
  }
  if (sub == "verify") return RunConfig(sub, {{"suite", "all"}, {"reps", 2000}}, {"suite", "seed", "reps"});
  raise(ErrorCode::kConfigInvalid, "unknown subcommand '" + sub + "'");
}

int run_moments(const RunConfig& cfg) {
  const auto kernel = make_named_kernel(cfg.get_string("kernel"), cfg.get_int("N"));
  const auto m = compute_moments(kernel, quad_options(cfg));
  ArtifactWriter(cfg).write_json({{"config", cfg.echo()}, {"moments", m}});
  return 0;
}

int run_lkc_scale(const RunConfig& cfg) {
  cfg.require({"domain", "sigma"});
  const auto geom = load_domain(cfg);
  const int N = resolve_dimension(cfg, geom);
  const auto [lo, hi] = sigma_pair(cfg);
  const std::string rule_name = cfg.get_string("mu_rule");
  MuRule rule = MuRule::kIntegral;
  if (rule_name == "halved-odd") {
    rule = MuRule::kHalvedOdd;
  } else if (rule_name != "integral") {
    raise(ErrorCode::kConfigInvalid, "mu_rule must be 'integral' or 'halved-odd'");
  }
  const auto m = compute_moments(make_named_kernel(cfg.get_string("kernel"), N), quad_options(cfg));
  const ScaleRange range{lo, hi};
  const auto alpha = scale_alpha_lkcs(m, geom, range, rule);
  const auto lkcs = lkcs_from_alpha(alpha, m.kappa);
  const auto top = scale_top_two(m, geom, range);
  Json doc = {{"config", cfg.echo()},
              {"moments", m},
              {"domain", geom},
              {"lkcs", lkcs},
              {"alpha_lkcs", alpha},
              {"top_two_closed_form", {{"L_N+1", top.top}, {"L_N", top.second}}}};
  ArtifactWriter(cfg).write_json(doc);
  return 0;
}

int run_lkc_rotation(const RunConfig& cfg) {
  cfg.require({"domain", "sigma", "seed"});
  const auto geom = load_domain(cfg);
  const int N = resolve_dimension(cfg, geom);
  const auto [s1, s2] = sigma_pair(cfg);
  const auto m = compute_moments(make_named_kernel(cfg.get_string("kernel"), N), quad_options(cfg));
  RotationOptions opts;
  opts.nodes_per_axis = cfg.get_int("nodes");
  opts.panels = cfg.get_int("panels");
  opts.r_samples = cfg.get_uint("r_samples");
  opts.seed = cfg.get_uint("seed");
  opts.threads = cfg.threads();
  const RotationParams p{N, s1, s2};
  const auto top = lkc_rotation_top_two(p, m, geom, opts);
  Json doc = top;
  doc["config"] = cfg.echo();
  doc["moments"] = m;
  doc["lkcs"] = rotation_lkc_vector(top);
  ArtifactWriter(cfg).write_json(doc);
  return 0;
}

int run_eec(const RunConfig& cfg) {
  cfg.require({"lkcs"});
  const auto lkcs = load_lkcs(cfg);
  const auto curve = eec_curve(lkcs, parse_grid(cfg.get_string("u_grid")));
  ArtifactWriter writer(cfg);
  if (cfg.has("out") && ends_with(cfg.get_string("out"), ".json")) {
    Json doc = curve;
    doc["config"] = cfg.echo();
    writer.write_json(doc);
    return 0;
  }
  std::ostringstream os;
  os << "# config: " << cfg.echo().dump() << '\n';
  if (lkcs.truncated) os << "# truncated LKC vector: entries below " << lkcs.lowest_valid << " omitted\n";
  os << "u,eec\n";
  for (std::size_t i = 0; i < curve.thresholds.size(); ++i) {
    os << csv_number(curve.thresholds[i]) << ',' << csv_number(curve.eec_values[i]) << '\n';
  }
  writer.write(os.str());
  return 0;
}

int run_threshold(const RunConfig& cfg) {
  cfg.require({"lkcs", "alpha"});
  const auto lkcs = load_lkcs(cfg);
  const double alpha = cfg.get_double("alpha");
  const double u = threshold_for_level(lkcs, alpha);
  std::ostringstream line;
  line << std::fixed << std::setprecision(6) << u << '\n';
  if (cfg.has("out")) {
    Json doc = {{"config", cfg.echo()},
                {"alpha", alpha},
                {"u", u},
                {"eec_at_u", expected_ec(lkcs, u)},
                {"monotone_onset", monotone_onset(lkcs)},
                {"truncated", lkcs.truncated}};
    ArtifactWriter(cfg).write_json(doc);
  }
  std::cout << line.str();
  return 0;
}

int run_simulate(const RunConfig& cfg) {
  cfg.require({"sigma", "u", "seed"});
  const int N = cfg.get_int("N");
  const auto kernel = make_named_kernel(cfg.get_string("kernel"), N);
  GridSpec spec;
  if (cfg.has("T")) {
    spec.extent = cfg.get_list("T");
  } else {
    spec.extent.assign(static_cast<std::size_t>(std::max(N, 0)), 10.0);
  }
  if (static_cast<int>(spec.extent.size()) != N) {
    raise(ErrorCode::kDimensionMismatch, "T needs one extent per spatial axis");
  }
  const auto [lo, hi] = sigma_pair(cfg);
  spec.range = {lo, hi};
  spec.spacing = cfg.get_double("spacing");
  spec.scales_per_octave = cfg.get_int("scales_per_octave");
  spec.padding_sigmas = cfg.get_double("padding");
  const auto us = cfg.get_list("u");
  const auto stats =
      monte_carlo_eec(kernel, spec, us, cfg.get_uint("reps"), cfg.get_uint("seed"), cfg.threads());
  const auto m = compute_moments(kernel);
  const auto lkcs = scale_space_lkcs(m, rectangle_geometry(spec.extent), spec.range);

  Json rows = Json::array();
  for (std::size_t i = 0; i < us.size(); ++i) {
    rows.push_back({{"u", us[i]},
                    {"mean_chi", stats.mean_chi[i]},
                    {"se", stats.se_chi[i]},
                    {"p_sup", stats.p_sup[i]},
                    {"se_p_sup", stats.se_p_sup[i]},
                    {"formula_eec", expected_ec(lkcs, us[i])}});
  }
  Json doc = {{"config", cfg.echo()},
              {"realizations", stats.realizations},
              {"seed", stats.seed},
              {"scales", scale_grid(spec)},
              {"lkcs", lkcs},
              {"thresholds", rows}};
  ArtifactWriter writer(cfg);
  writer.write_json(doc);
  if (cfg.has("csv")) {
    std::ostringstream os;
    os << "# config: " << cfg.echo().dump() << '\n';
    os << "u,mean_chi,se,p_sup,se_p_sup,formula_eec\n";
    for (const auto& r : rows) {
      os << csv_number(r["u"]) << ',' << csv_number(r["mean_chi"]) << ',' << csv_number(r["se"]) << ','
         << csv_number(r["p_sup"]) << ',' << csv_number(r["se_p_sup"]) << ','
         << csv_number(r["formula_eec"]) << '\n';
    }
    writer.write(os.str(), "csv");
  }
  return 0;
}

int run_verify(const RunConfig& cfg) {
  cfg.require({"seed"});
  VerifyOptions opts;
  opts.seed = cfg.get_uint("seed");
  opts.threads = cfg.threads();
  opts.realizations = cfg.get_uint("reps");
  const auto rows = run_verification(cfg.get_string("suite"), opts);
  std::size_t failed = 0;
  Json results = Json::array();
  std::ostringstream table;
  table << std::left << std::setw(6) << "status" << std::setw(12) << "suite" << "check\n";
  for (const auto& r : rows) {
    if (!r.passed) ++failed;
    table << std::left << std::setw(6) << (r.passed ? "PASS" : "FAIL") << std::setw(12) << r.suite << r.name;
    if (r.detail != "" && r.detail != "abs" && r.detail != "rel" && r.detail != "3se" &&
        r.detail != "bootstrap") {
      table << "  (" << r.detail << ")";
    }
    table << '\n';
    results.push_back({{"suite", r.suite},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"observed", r.observed},
                       {"expected", r.expected},
                       {"tolerance", r.tolerance},
                       {"kind", r.detail}});
  }
  table << rows.size() - failed << " passed, " << failed << " failed\n";
  if (cfg.has("out")) {
    ArtifactWriter(cfg).write_json({{"config", cfg.echo()}, {"results", results}, {"failed", failed}});
  }
  std::cout << table.str();
  return failed == 0 ? 0 : 1;
}

int dispatch(const RunConfig& cfg) {
  const auto& s = cfg.subcommand();
  if (s == "moments") return run_moments(cfg);
  if (s == "lkc scale") return run_lkc_scale(cfg);
  if (s == "lkc rotation") return run_lkc_rotation(cfg);
  if (s == "eec") return run_eec(cfg);
  if (s == "threshold") return run_threshold(cfg);
  if (s == "simulate") return run_simulate(cfg);
  if (s == "verify") return run_verify(cfg);
  raise(ErrorCode::kConfigInvalid, "unknown subcommand '" + s + "'");
}

}  // namespace lkcfield::cli

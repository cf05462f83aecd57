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

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commands.hpp"
#include "lkcfield/errors.hpp"

namespace {

using lkcfield::ErrorCode;
using lkcfield::cli::RunConfig;

struct FlagSpec {
  const char* flag;
  const char* key;
  const char* help;
};

const std::vector<FlagSpec> kFlags = {
    {"--kernel", "kernel", "gaussian | marr"},
    {"--N", "N", "spatial dimension"},
    {"--domain", "domain", "rect:a,b,... or ball:N,r"},
    {"--sigma", "sigma", "scale band lo,hi"},
    {"--abs-tol", "abs_tol", "absolute quadrature tolerance"},
    {"--mu-rule", "mu_rule", "integral | halved-odd"},
    {"--r-samples", "r_samples", "Haar samples for R_{N-1} (N >= 3)"},
    {"--nodes", "nodes", "Gauss-Legendre nodes per axis"},
    {"--panels", "panels", "panels per axis"},
    {"--seed", "seed", "random seed"},
    {"--lkcs", "lkcs", "JSON file holding an LKC vector"},
    {"--u-grid", "u_grid", "threshold grid start:stop:step"},
    {"--alpha", "alpha", "target level"},
    {"--T", "T", "spatial extents, comma separated"},
    {"--u", "u", "thresholds, comma separated"},
    {"--reps", "reps", "Monte-Carlo realizations"},
    {"--spacing", "spacing", "spatial grid spacing (0: sigma_low/4)"},
    {"--scales-per-octave", "scales_per_octave", "scale grid density"},
    {"--padding", "padding", "noise margin in units of sigma_high"},
    {"--suite", "suite", "kernel | domain | scale | rotation | gkf | simulation | all"},
    {"--csv", "csv", "CSV export path"},
    {"--out", "out", "output path (stdout when omitted)"},
    {"--threads", "threads", "worker threads (0: all cores)"},
};

struct Subcommand {
  std::string name;
  CLI::App* app = nullptr;
  std::map<std::string, std::string> values;
  std::map<std::string, CLI::Option*> options;
  std::string config_path;
  CLI::Option* config = nullptr;
};

void add_flags(Subcommand& sub) {
  const RunConfig defaults = lkcfield::cli::make_config(sub.name);
  for (const auto& f : kFlags) {
    // Offer only the flags the subcommand understands.
    if (!defaults.accepts(f.key)) continue;
    sub.options[f.key] = sub.app->add_option(f.flag, sub.values[f.key], f.help);
  }
  sub.config = sub.app->add_option("--config", sub.config_path, "JSON config file");
}

int emit_error(ErrorCode code, const std::string& message) {
  nlohmann::json rec = {{"error",
                         {{"code", std::string(lkcfield::error_code_name(code))},
                          {"exit_code", static_cast<int>(code)},
                          {"message", message}}}};
  std::cerr << rec.dump() << std::endl;
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lipschitz-Killing curvatures and expected Euler characteristics of scale- and "
               "rotation-space Gaussian fields"};
  app.require_subcommand(1);
  std::vector<Subcommand> subs;
  subs.reserve(7);

  auto make = [&](CLI::App* parent, const std::string& name, const std::string& local,
                  const std::string& help) {
    Subcommand s;
    s.name = name;
    s.app = parent->add_subcommand(local, help);
    subs.push_back(std::move(s));
  };

  make(&app, "moments", "moments", "kernel constants");
  CLI::App* lkc = app.add_subcommand("lkc", "Lipschitz-Killing curvatures");
  lkc->require_subcommand(1);
  make(lkc, "lkc scale", "scale", "all LKCs of T x [sigma_low, sigma_high]");
  make(lkc, "lkc rotation", "rotation", "top two LKCs of the rotation space");
  make(&app, "eec", "eec", "expected Euler characteristic curve");
  make(&app, "threshold", "threshold", "threshold for a target level");
  make(&app, "simulate", "simulate", "Monte-Carlo excursion statistics");
  make(&app, "verify", "verify", "run the invariant suites");

  try {
    for (auto& s : subs) add_flags(s);
  } catch (const lkcfield::Error& e) {
    return emit_error(e.code(), e.what());
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return emit_error(ErrorCode::kConfigInvalid, e.what());
  }

  try {
    for (auto& s : subs) {
      if (!s.app->parsed()) continue;
      RunConfig cfg = lkcfield::cli::make_config(s.name);
      if (s.config->count() > 0) cfg.apply_file(s.config_path);
      for (const auto& [key, opt] : s.options) {
        if (opt->count() > 0) cfg.apply_flag(key, s.values[key]);
      }
      return lkcfield::cli::dispatch(cfg);
    }
    return emit_error(ErrorCode::kConfigInvalid, "no subcommand given");
  } catch (const lkcfield::Error& e) {
    return emit_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return emit_error(ErrorCode::kInvalidArgument, e.what());
  }
}

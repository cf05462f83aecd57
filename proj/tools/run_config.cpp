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

#include "run_config.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "lkcfield/errors.hpp"

namespace lkcfield::cli {

namespace {

const std::set<std::string> kIntegerKeys = {"N", "r_samples", "nodes", "panels", "reps",
                                            "seed", "scales_per_octave", "threads"};
const std::set<std::string> kRealKeys = {"abs_tol", "alpha", "spacing", "padding"};
const std::set<std::string> kListKeys = {"sigma", "T", "u"};
const std::set<std::string> kExecutionKeys = {"threads", "out", "csv", "config"};

[[noreturn]] void invalid(const std::string& msg) { raise(ErrorCode::kConfigInvalid, msg); }

std::vector<double> parse_list(const std::string& key, const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      invalid("bad number '" + item + "' for '" + key + "'");
    }
  }
  if (out.empty()) invalid("empty list for '" + key + "'");
  return out;
}

}  // namespace

RunConfig::RunConfig(std::string subcommand, Json defaults, std::vector<std::string> allowed)
    : subcommand_(std::move(subcommand)), values_(std::move(defaults)), allowed_(std::move(allowed)) {
  for (const char* k : {"threads", "out", "config"}) allowed_.emplace_back(k);
}

void RunConfig::check_key(const std::string& key) const {
  if (!accepts(key)) {
    invalid("key '" + key + "' does not apply to '" + subcommand_ + "'");
  }
}

Json RunConfig::coerce(const std::string& key, const std::string& text) const {
  try {
    if (kIntegerKeys.count(key)) {
      std::size_t used = 0;
      if (!text.empty() && text[0] == '-') throw std::invalid_argument(text);
      const unsigned long long v = std::stoull(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Json(static_cast<std::uint64_t>(v));
    }
    if (kRealKeys.count(key)) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return Json(v);
    }
  } catch (const std::exception&) {
    invalid("bad value '" + text + "' for '" + key + "'");
  }
  if (kListKeys.count(key)) return Json(parse_list(key, text));
  return Json(text);
}

void RunConfig::apply_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open config file '" + path + "'");
  Json doc;
  try {
    in >> doc;
  } catch (const Json::exception& e) {
    invalid("config file '" + path + "' is not valid JSON: " + e.what());
  }
  if (!doc.is_object()) invalid("config file must hold a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() == "subcommand") {
      if (it.value() != subcommand_) {
        const std::string named = it.value().is_string() ? it.value().get<std::string>() : it.value().dump();
        invalid("config file is for '" + named + "', not '" + subcommand_ + "'");
      }
      continue;
    }
    check_key(it.key());
    if (it.value().is_string() && (kListKeys.count(it.key()) || kIntegerKeys.count(it.key()) ||
                                   kRealKeys.count(it.key()))) {
      values_[it.key()] = coerce(it.key(), it.value().get<std::string>());
    } else {
      values_[it.key()] = it.value();
    }
  }
}

void RunConfig::apply_flag(const std::string& key, const std::string& text) {
  check_key(key);
  values_[key] = coerce(key, text);
}

bool RunConfig::accepts(const std::string& key) const {
  return std::find(allowed_.begin(), allowed_.end(), key) != allowed_.end();
}

bool RunConfig::has(const std::string& key) const {
  return values_.contains(key) && !values_.at(key).is_null();
}

void RunConfig::require(const std::vector<std::string>& keys) const {
  for (const auto& k : keys) {
    if (!has(k)) invalid("'" + subcommand_ + "' needs '" + k + "'");
  }
}

void RunConfig::require_file(const std::string& key) const {
  const std::string path = get_string(key);
  if (!std::filesystem::is_regular_file(path)) invalid("file '" + path + "' for '" + key + "' does not exist");
}

std::string RunConfig::get_string(const std::string& key) const {
  if (!has(key)) invalid("missing '" + key + "'");
  const Json& v = values_.at(key);
  if (!v.is_string()) invalid("'" + key + "' must be a string");
  return v.get<std::string>();
}

double RunConfig::get_double(const std::string& key) const {
  if (!has(key)) invalid("missing '" + key + "'");
  const Json& v = values_.at(key);
  if (!v.is_number()) invalid("'" + key + "' must be a number");
  return v.get<double>();
}

int RunConfig::get_int(const std::string& key) const {
  const std::uint64_t v = get_uint(key);
  if (v > 1'000'000'000ull) invalid("'" + key + "' is too large");
  return static_cast<int>(v);
}

std::uint64_t RunConfig::get_uint(const std::string& key) const {
  if (!has(key)) invalid("missing '" + key + "'");
  const Json& v = values_.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    invalid("'" + key + "' must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<double> RunConfig::get_list(const std::string& key) const {
  if (!has(key)) invalid("missing '" + key + "'");
  const Json& v = values_.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (v.is_array()) {
    std::vector<double> out;
    for (const auto& x : v) {
      if (!x.is_number()) invalid("'" + key + "' must hold numbers");
      out.push_back(x.get<double>());
    }
    if (out.empty()) invalid("empty list for '" + key + "'");
    return out;
  }
  if (v.is_string()) return parse_list(key, v.get<std::string>());
  invalid("'" + key + "' must be a list of numbers");
}

Json RunConfig::echo() const {
  Json out = Json::object();
  out["subcommand"] = subcommand_;
  for (auto it = values_.begin(); it != values_.end(); ++it) {
    if (kExecutionKeys.count(it.key()) || it.value().is_null()) continue;
    out[it.key()] = it.value();
  }
  return out;
}

unsigned RunConfig::threads() const {
  if (!has("threads")) return 0;
  return static_cast<unsigned>(get_uint("threads"));
}

}  // namespace lkcfield::cli

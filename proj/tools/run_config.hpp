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

#ifndef LKCFIELD_TOOLS_RUN_CONFIG_HPP
#define LKCFIELD_TOOLS_RUN_CONFIG_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lkcfield::cli {

using Json = nlohmann::json;

/// Effective settings for one subcommand: defaults, overlaid by the config
/// file, overlaid by flags given on the command line.
class RunConfig {
 public:
  RunConfig(std::string subcommand, Json defaults, std::vector<std::string> allowed);

  const std::string& subcommand() const noexcept { return subcommand_; }

  /// Merges a JSON config file. Unknown keys and a mismatching
  /// "subcommand" entry raise ConfigInvalid.
  void apply_file(const std::string& path);

  /// Applies a flag value given as text on the command line.
  void apply_flag(const std::string& key, const std::string& text);

  bool accepts(const std::string& key) const;
  bool has(const std::string& key) const;
  std::string get_string(const std::string& key) const;
  double get_double(const std::string& key) const;
  int get_int(const std::string& key) const;
  std::uint64_t get_uint(const std::string& key) const;
  std::vector<double> get_list(const std::string& key) const;

  /// Raises ConfigInvalid unless every key is present.
  void require(const std::vector<std::string>& keys) const;

  /// Raises ConfigInvalid when the file named by `key` does not exist.
  void require_file(const std::string& key) const;

  /// Settings echoed into artifacts. Execution-only keys (thread count,
  /// output paths, the config path) are left out so artifacts depend only
  /// on inputs that affect results.
  Json echo() const;

  unsigned threads() const;

 private:
  void check_key(const std::string& key) const;
  Json coerce(const std::string& key, const std::string& text) const;

  std::string subcommand_;
  Json values_;
  std::vector<std::string> allowed_;
};

}  // namespace lkcfield::cli

#endif  // LKCFIELD_TOOLS_RUN_CONFIG_HPP

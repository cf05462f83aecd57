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

#ifndef LKCFIELD_TOOLS_COMMANDS_HPP
#define LKCFIELD_TOOLS_COMMANDS_HPP

#include <chrono>

#include "run_config.hpp"

namespace lkcfield::cli {

/// Default settings and admissible keys for a subcommand.
RunConfig make_config(const std::string& subcommand);

/// Each returns the process exit status.
int run_moments(const RunConfig& cfg);
int run_lkc_scale(const RunConfig& cfg);
int run_lkc_rotation(const RunConfig& cfg);
int run_eec(const RunConfig& cfg);
int run_threshold(const RunConfig& cfg);
int run_simulate(const RunConfig& cfg);
int run_verify(const RunConfig& cfg);

int dispatch(const RunConfig& cfg);

}  // namespace lkcfield::cli

#endif  // LKCFIELD_TOOLS_COMMANDS_HPP

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

#ifndef LKCFIELD_RANDOM_HPP
#define LKCFIELD_RANDOM_HPP

#include <cstdint>
#include <random>

namespace lkcfield {

using Rng = std::mt19937_64;

/// Independent generator for work unit `stream` of a run seeded by `seed`.
/// `tag` separates unrelated consumers sharing a seed (e.g. tube volume vs
/// Haar sampling). The mapping is fixed, so any work unit can be replayed.
Rng substream(std::uint64_t seed, std::uint64_t stream, std::uint64_t tag = 0);

/// Samples handed to each substream by the block-parallel Monte-Carlo loops.
inline constexpr std::uint64_t kSamplesPerBlock = 4096;

}  // namespace lkcfield

#endif  // LKCFIELD_RANDOM_HPP

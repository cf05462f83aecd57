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

#ifndef LKCFIELD_PARALLEL_HPP
#define LKCFIELD_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace lkcfield {

/// 0 maps to the hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested) noexcept;

/// Runs body(i) for i in [0, count) on up to `threads` workers. Work is
/// handed out in index order; callers write results by index so the outcome
/// does not depend on the thread count. The exception thrown for the lowest
/// failing index is rethrown after all workers join.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace lkcfield

#endif  // LKCFIELD_PARALLEL_HPP

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

#ifndef LKCFIELD_ERRORS_HPP
#define LKCFIELD_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace lkcfield {

/// Failure categories raised by the library. The numeric values double as
/// process exit codes in the command-line tool, so they are stable.
enum class ErrorCode : int {
  kQuadratureNotConverged = 10,
  kInvariantViolation = 11,
  kEmptySideList = 12,
  kUnsupportedDimension = 13,
  kDimensionMismatch = 14,
  kDegenerateRange = 15,
  kUnorderedInput = 16,
  kIndexOutOfRange = 17,
  kLevelNotAttainable = 18,
  kResolutionTooCoarse = 19,
  kPaddingTooSmall = 20,
  kConfigInvalid = 21,
  kInvalidArgument = 22,
  kIoError = 23,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void raise(ErrorCode code, const std::string& message);

}  // namespace lkcfield

#endif  // LKCFIELD_ERRORS_HPP

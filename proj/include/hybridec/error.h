// Copyright 2026 The hybridec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace hybridec {

enum class ErrorCode {
  kDimensionMismatch,
  kOutOfRange,
  kMalformedDocument,
  kInconsistentDimensions,
  kInvariantViolation,
  kInvalidStabilizer,
  kGuardExceeded,
  kNotDetectable,
  kNonUnitState,
};

const char* error_code_name(ErrorCode code);

/// Base exception for all library failures. The code distinguishes bad input
/// from exceeded cost guards so the CLI can map them to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hybridec

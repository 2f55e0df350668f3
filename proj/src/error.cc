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

#include "hybridec/error.h"

namespace hybridec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDimensionMismatch: return "dimension_mismatch";
    case ErrorCode::kOutOfRange: return "out_of_range";
    case ErrorCode::kMalformedDocument: return "malformed_document";
    case ErrorCode::kInconsistentDimensions: return "inconsistent_dimensions";
    case ErrorCode::kInvariantViolation: return "invariant_violation";
    case ErrorCode::kInvalidStabilizer: return "invalid_stabilizer";
    case ErrorCode::kGuardExceeded: return "guard_exceeded";
    case ErrorCode::kNotDetectable: return "not_detectable";
    case ErrorCode::kNonUnitState: return "non_unit_state";
  }
  return "unknown";
}

}  // namespace hybridec

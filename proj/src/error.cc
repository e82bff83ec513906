// Copyright 2026 The aecover Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "aec/error.h"

namespace aec {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance:
      return "InvalidInstance";
    case ErrorCode::kIsolatedTerminal:
      return "IsolatedTerminal";
    case ErrorCode::kInfeasible:
      return "Infeasible";
    case ErrorCode::kEmptyLevels:
      return "EmptyLevels";
    case ErrorCode::kNonMonotone:
      return "NonMonotone";
    case ErrorCode::kNotBipartite:
      return "NotBipartite";
    case ErrorCode::kNonUniformFacility:
      return "NonUniformFacility";
    case ErrorCode::kNotUnitThresholds:
      return "NotUnitThresholds";
    case ErrorCode::kSizeBoundViolated:
      return "SizeBoundViolated";
    case ErrorCode::kOracleViolation:
      return "OracleViolation";
    case ErrorCode::kDomainError:
      return "DomainError";
    case ErrorCode::kLimitExceeded:
      return "LimitExceeded";
    case ErrorCode::kGenerationFailed:
      return "GenerationFailed";
    case ErrorCode::kParseError:
      return "ParseError";
  }
  return "Unknown";
}

}  // namespace aec

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

#ifndef AEC_ERROR_H_
#define AEC_ERROR_H_

#include <stdexcept>
#include <string>

namespace aec {

enum class ErrorCode {
  kInvalidInstance,
  kIsolatedTerminal,
  kInfeasible,
  kEmptyLevels,
  kNonMonotone,
  kNotBipartite,
  kNonUniformFacility,
  kNotUnitThresholds,
  kSizeBoundViolated,
  kOracleViolation,
  kDomainError,
  kLimitExceeded,
  kGenerationFailed,
  kParseError,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " +
                           message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aec

#endif  // AEC_ERROR_H_

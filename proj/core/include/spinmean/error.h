// Copyright 2026 The spinmean Authors
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

#ifndef SPINMEAN_ERROR_H
#define SPINMEAN_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinmean {

/// Failure categories raised by the library. The names are stable; the CLI
/// serializes them verbatim in its error documents.
enum class ErrorCode {
    ValidationError,
    ConstraintViolation,
    InvalidDensity,
    ZeroSpinor,
    NotPure,
    NotNormalized,
    NonzeroC1Phase,
    PoleError,
    DegenerateSuperposition,
    CrossCheckMismatch,
    ZeroVector,
    MissingAxis,
};

std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

}  // namespace spinmean

#endif

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

#include "spinmean/error.h"

namespace spinmean {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ValidationError:
            return "ValidationError";
        case ErrorCode::ConstraintViolation:
            return "ConstraintViolation";
        case ErrorCode::InvalidDensity:
            return "InvalidDensity";
        case ErrorCode::ZeroSpinor:
            return "ZeroSpinor";
        case ErrorCode::NotPure:
            return "NotPure";
        case ErrorCode::NotNormalized:
            return "NotNormalized";
        case ErrorCode::NonzeroC1Phase:
            return "NonzeroC1Phase";
        case ErrorCode::PoleError:
            return "PoleError";
        case ErrorCode::DegenerateSuperposition:
            return "DegenerateSuperposition";
        case ErrorCode::CrossCheckMismatch:
            return "CrossCheckMismatch";
        case ErrorCode::ZeroVector:
            return "ZeroVector";
        case ErrorCode::MissingAxis:
            return "MissingAxis";
    }
    return "Unknown";
}

}  // namespace spinmean

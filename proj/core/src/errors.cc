// Copyright 2026 The gpk Authors
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

#include "gpk/errors.h"

namespace gpk {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LengthMismatch:
            return "LengthMismatch";
        case ErrorCode::TooLarge:
            return "TooLarge";
        case ErrorCode::BadIndex:
            return "BadIndex";
        case ErrorCode::NotDeterministic:
            return "NotDeterministic";
        case ErrorCode::PromiseViolated:
            return "PromiseViolated";
        case ErrorCode::NotABasis:
            return "NotABasis";
        case ErrorCode::NotAffine:
            return "NotAffine";
        case ErrorCode::WrongShape:
            return "WrongShape";
        case ErrorCode::NotABitDrop:
            return "NotABitDrop";
        case ErrorCode::ParseError:
            return "ParseError";
    }
    return "Unknown";
}

GpkError::GpkError(ErrorCode code, const std::string &message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message), code_(code) {
}

ParseError::ParseError(size_t line, size_t column, const std::string &message)
    : GpkError(
          ErrorCode::ParseError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line),
      column_(column) {
}

}  // namespace gpk

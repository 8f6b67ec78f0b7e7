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

#ifndef GPK_ERRORS_H
#define GPK_ERRORS_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace gpk {

enum class ErrorCode {
    LengthMismatch,
    TooLarge,
    BadIndex,
    NotDeterministic,
    PromiseViolated,
    NotABasis,
    NotAffine,
    WrongShape,
    NotABitDrop,
    ParseError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class GpkError : public std::runtime_error {
   public:
    GpkError(ErrorCode code, const std::string &message);

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Raised by the truth-table reader; line and column are 1-based.
class ParseError : public GpkError {
   public:
    ParseError(size_t line, size_t column, const std::string &message);

    size_t line() const noexcept {
        return line_;
    }
    size_t column() const noexcept {
        return column_;
    }

   private:
    size_t line_;
    size_t column_;
};

}  // namespace gpk

#endif

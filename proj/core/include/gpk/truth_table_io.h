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

#ifndef GPK_TRUTH_TABLE_IO_H
#define GPK_TRUTH_TABLE_IO_H

#include <filesystem>
#include <iosfwd>

#include "gpk/oracle.h"

namespace gpk {

// Text format:
//
//   n m
//   <m-character output for input 0>
//   <m-character output for input 1>
//   ...
//
// exactly 2^n output lines, most significant bit leftmost. Trailing blank lines
// are ignored and a trailing '\r' on any line is tolerated. Errors are thrown
// as ParseError with 1-based line and column.

BooleanFunction read_truth_table(std::istream &in);
BooleanFunction load_truth_table(const std::filesystem::path &path);

/// Writes any representation (n <= 20) in the text format above.
void write_truth_table(std::ostream &out, const BooleanFunction &f);

}  // namespace gpk

#endif

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

#ifndef GPK_REPORT_JSON_H
#define GPK_REPORT_JSON_H

#include <nlohmann/json.hpp>

#include "gpk/gpk.h"

namespace gpk {

// Stable report shape shared by every solver:
//
//   {
//     "problem": "gpk" | "dj" | "bv" | "gbv" | "dropbit",
//     "n": <int>, "m": <int>,
//     "verdict": "Constant" | "Balanced"      (dj only)
//     "lambda": "<m bits>",                   (dj only)
//     "values": ["<m bits>", ...],            (dj only)
//     "result": {...},                        (problem-specific)
//     "runs": [{"marker", "outcome", "deterministic", "seed", "backend",
//               "probability"}, ...],
//     "quantum_calls": <int>, "classical_calls": <int>
//   }
//
// Bit strings use the display order of BitString::str(), highest index first.
// Matrices are arrays of row strings.

nlohmann::json to_json(const GpkRunRecord &run);
nlohmann::json gpk_report_json(size_t n, size_t m, const GpkRunRecord &run);
nlohmann::json to_json(const DjReport &report);
nlohmann::json to_json(const BvReport &report);
nlohmann::json to_json(const DropBitReport &report);
nlohmann::json matrix_json(const F2Matrix &matrix);

}  // namespace gpk

#endif

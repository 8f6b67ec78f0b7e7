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

#include "gpk/report_json.h"

namespace gpk {

namespace {

nlohmann::json runs_json(const std::vector<GpkRunRecord> &runs) {
    auto out = nlohmann::json::array();
    for (const auto &run : runs) {
        out.push_back(to_json(run));
    }
    return out;
}

}  // namespace

nlohmann::json to_json(const GpkRunRecord &run) {
    return {
        {"marker", run.marker.str()},
        {"outcome", run.outcome.str()},
        {"deterministic", run.deterministic},
        {"seed", run.seed},
        {"backend", backend_name(run.backend)},
        {"probability", run.probability},
    };
}

nlohmann::json matrix_json(const F2Matrix &matrix) {
    auto rows = nlohmann::json::array();
    for (const auto &row : matrix.row_data()) {
        rows.push_back(row.str());
    }
    return rows;
}

nlohmann::json gpk_report_json(size_t n, size_t m, const GpkRunRecord &run) {
    return {
        {"problem", "gpk"},
        {"n", n},
        {"m", m},
        {"result", {{"marker", run.marker.str()}, {"outcome", run.outcome.str()}, {"probability", run.probability}}},
        {"runs", nlohmann::json::array({to_json(run)})},
        {"quantum_calls", run.quantum_oracle_calls},
        {"classical_calls", 0},
        {"seed", run.seed},
    };
}

nlohmann::json to_json(const DjReport &report) {
    auto values = nlohmann::json::array();
    for (const auto &v : report.values) {
        values.push_back(v.str());
    }
    return {
        {"problem", "dj"},
        {"n", report.n},
        {"m", report.m},
        {"verdict", verdict_name(report.verdict)},
        {"lambda", report.lambda.str()},
        {"values", values},
        {"runs", runs_json(report.runs)},
        {"quantum_calls", report.total_quantum_calls},
        {"classical_calls", report.classical_calls},
        {"seed", report.seed},
    };
}

nlohmann::json to_json(const BvReport &report) {
    return {
        {"problem", "gbv"},
        {"n", report.n},
        {"m", report.m},
        {"result",
         {
             {"R", matrix_json(report.matrix)},
             {"r0", report.offset.str()},
             {"marker_basis_matrix", matrix_json(report.marker_basis_matrix)},
         }},
        {"runs", runs_json(report.runs)},
        {"quantum_calls", report.total_quantum_calls},
        {"classical_calls", report.classical_calls},
        {"seed", report.seed},
    };
}

nlohmann::json to_json(const DropBitReport &report) {
    return {
        {"problem", "dropbit"},
        {"n", report.n},
        {"m", report.n - 1},
        {"result", {{"dropped_bit", report.dropped}}},
        {"runs", runs_json(report.runs)},
        {"quantum_calls", report.total_quantum_calls},
        {"classical_calls", 0},
        {"seed", report.seed},
    };
}

}  // namespace gpk

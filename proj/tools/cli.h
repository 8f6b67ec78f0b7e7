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

#ifndef GPK_TOOLS_CLI_H
#define GPK_TOOLS_CLI_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpk/gpk.h"

namespace gpk::cli {

inline constexpr int EXIT_OK = 0;
inline constexpr int EXIT_USAGE = 2;
inline constexpr int EXIT_ORACLE = 3;

enum class Command { Dj, Bv, Gbv, Gpk, DropBit, Demo };
enum class OutputFormat { Json, Text };

struct RunConfig {
    Command command = Command::Demo;
    std::optional<size_t> n;
    std::optional<size_t> m;
    /// Generator spec: constant | balanced | affine | bitdrop:<j> | table:<path>
    std::string oracle;
    std::optional<std::string> marker;
    std::optional<std::vector<std::string>> basis;
    BackendChoice backend = BackendChoice::Auto;
    uint64_t seed = 0;
    OutputFormat output = OutputFormat::Text;
    bool timestamp = false;
};

/// Thrown for invalid flag combinations; maps to exit status 2.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Builds the oracle named by `config.oracle`, resolving n and m.
BooleanFunction make_oracle(const RunConfig &config);

/// Executes one configured command. Reports go to `out`, diagnostics to `err`.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses argv (CLI11) and runs.
int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

/// One line of the worked-example walkthrough.
struct DemoStage {
    std::string name;
    std::string description;
    size_t nonzero;
    double max_magnitude;
    /// Basis kets with their amplitudes, listed when there are few of them.
    std::vector<std::pair<std::string, double>> terms;
};

struct DemoResult {
    std::vector<DemoStage> stages;
    BitString full_outcome;
    BitString compact_outcome;
    double full_probability;
};

/// f(x2 x1 x0) = x2 x1 with marker 01, stepped through phi_0..phi_5.
DemoResult run_demo();

}  // namespace gpk::cli

#endif

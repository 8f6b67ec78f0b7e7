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

#include "cli.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gpk/errors.h"
#include "gpk/report_json.h"
#include "gpk/truth_table_io.h"

namespace gpk::cli {

namespace {

constexpr const char *ORACLE_GRAMMAR = R"(Oracle spec grammar (--oracle / --gen):
  constant        seeded random constant n -> m table
  balanced        seeded random balanced n -> m table
  affine          seeded random f(x) = r0 xor R.x
  bitdrop:<j>     deletes input bit j; m = n - 1
  table:<path>    truth-table file; n and m come from the header
Bit strings are written with the highest index leftmost, e.g. --marker 01
sets bit 0 of the marker.)";

std::string command_name(Command command) {
    switch (command) {
        case Command::Dj:
            return "dj";
        case Command::Bv:
            return "bv";
        case Command::Gbv:
            return "gbv";
        case Command::Gpk:
            return "gpk";
        case Command::DropBit:
            return "dropbit";
        case Command::Demo:
            return "demo";
    }
    return "?";
}

size_t require_n(const RunConfig &config) {
    if (!config.n) {
        throw UsageError("--n is required for generated oracles");
    }
    return *config.n;
}

std::string utc_timestamp() {
    auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream out;
    out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return out.str();
}

void emit(const RunConfig &config, nlohmann::json report, const std::string &text, std::ostream &out) {
    if (config.output == OutputFormat::Json) {
        if (config.timestamp) {
            report["timestamp"] = utc_timestamp();
        }
        out << report.dump(2) << '\n';
    } else {
        out << text;
    }
}

std::string calls_line(uint64_t quantum, uint64_t classical) {
    return "quantum U_f calls: " + std::to_string(quantum) + ", classical calls: " + std::to_string(classical) + "\n";
}

std::string runs_text(const std::vector<GpkRunRecord> &runs) {
    std::ostringstream out;
    for (const auto &run : runs) {
        out << "  GPK(" << run.marker << ") -> " << run.outcome << "  p=" << std::fixed << std::setprecision(6)
            << run.probability << (run.deterministic ? " deterministic" : "") << "  [" << backend_name(run.backend)
            << ", seed " << run.seed << "]\n";
    }
    return out.str();
}

std::optional<std::vector<BitString>> parsed_basis(const RunConfig &config) {
    if (!config.basis) {
        return std::nullopt;
    }
    std::vector<BitString> basis;
    for (const auto &s : *config.basis) {
        basis.push_back(BitString::parse(s));
    }
    return basis;
}

int run_gpk(const RunConfig &config, std::ostream &out) {
    if (!config.marker) {
        throw UsageError("gpk requires --marker");
    }
    auto f = make_oracle(config);
    auto marker = BitString::parse(*config.marker);
    if (marker.len() != f.m()) {
        throw UsageError("--marker must have exactly m = " + std::to_string(f.m()) + " bits");
    }
    auto run = gpk_run(f, marker, config.backend, config.seed);
    std::ostringstream text;
    text << "GPK(" << marker << ") on " << f.kind_name() << " oracle, n = " << f.n() << ", m = " << f.m() << "\n"
         << runs_text({run}) << "outcome: " << run.outcome << "\n"
         << calls_line(run.quantum_oracle_calls, 0);
    emit(config, gpk_report_json(f.n(), f.m(), run), text.str(), out);
    return EXIT_OK;
}

int run_dj(const RunConfig &config, std::ostream &out) {
    auto f = make_oracle(config);
    // Introspection only: an exhaustive uncounted scan that enforces the promise.
    std::optional<PromiseClass> promise;
    if (f.n() <= MAX_TABLE_INPUT_BITS) {
        promise = classify_promise(f);
        if (promise->kind == PromiseKind::Neither) {
            throw GpkError(ErrorCode::PromiseViolated, "f is neither constant nor balanced");
        }
    }
    auto report = solve_generalized_dj(f, parsed_basis(config), config.backend, config.seed);

    BooleanFunction baseline_f = f;
    baseline_f.reset_counters();
    auto baseline = classical_dj_solver(baseline_f);

    auto json = to_json(report);
    json["classical_baseline"] = {
        {"solver", "deterministic"},
        {"verdict", promise_kind_name(baseline.kind)},
        {"calls", baseline_f.classical_calls()},
    };
    if (promise) {
        json["introspection"] = {{"promise", promise_kind_name(promise->kind)}};
    }

    std::ostringstream text;
    text << "generalized Deutsch-Jozsa on " << f.kind_name() << " oracle, n = " << f.n() << ", m = " << f.m() << "\n"
         << runs_text(report.runs) << "verdict: " << verdict_name(report.verdict) << "\n"
         << "lambda: " << report.lambda << "\n"
         << "values:";
    for (const auto &v : report.values) {
        text << ' ' << v;
    }
    text << "\n"
         << calls_line(report.total_quantum_calls, report.classical_calls)
         << "classical deterministic baseline: " << baseline_f.classical_calls() << " calls\n";
    if (promise) {
        text << "introspection (uncounted): " << promise_kind_name(promise->kind) << "\n";
    }
    emit(config, std::move(json), text.str(), out);
    return EXIT_OK;
}

int run_bv(const RunConfig &config, std::ostream &out) {
    auto f = make_oracle(config);
    if (f.m() != 1) {
        throw UsageError("bv needs m = 1; use gbv for wider outputs");
    }
    auto result = solve_modified_bv(f, config.seed);
    const uint64_t quantum = f.quantum_calls();
    const uint64_t classical = f.classical_calls();

    BooleanFunction baseline_f = f;
    baseline_f.reset_counters();
    auto baseline = classical_bv_solver(baseline_f);

    nlohmann::json json = {
        {"problem", "bv"},
        {"n", f.n()},
        {"m", 1},
        {"result", {{"r", result.r.str()}, {"r0", result.offset ? "1" : "0"}}},
        {"runs", nlohmann::json::array()},
        {"quantum_calls", quantum},
        {"classical_calls", classical},
        {"classical_baseline", {{"solver", "deterministic"}, {"calls", baseline_f.classical_calls()}}},
    };
    std::ostringstream text;
    text << "Bernstein-Vazirani on " << f.kind_name() << " oracle, n = " << f.n() << "\n"
         << "r: " << result.r << "\n"
         << "r0: " << result.offset << "\n"
         << calls_line(quantum, classical) << "classical deterministic baseline: " << baseline_f.classical_calls()
         << " calls (r = " << baseline.matrix.row(0) << ")\n";
    emit(config, std::move(json), text.str(), out);
    return EXIT_OK;
}

int run_gbv(const RunConfig &config, std::ostream &out) {
    auto f = make_oracle(config);
    auto report = solve_generalized_bv(f, parsed_basis(config), config.backend, config.seed);

    BooleanFunction baseline_f = f;
    baseline_f.reset_counters();
    classical_bv_solver(baseline_f);

    auto json = to_json(report);
    json["classical_baseline"] = {{"solver", "deterministic"}, {"calls", baseline_f.classical_calls()}};

    std::ostringstream text;
    text << "generalized Bernstein-Vazirani on " << f.kind_name() << " oracle, n = " << f.n() << ", m = " << f.m()
         << "\n"
         << runs_text(report.runs) << "R (row i = r_i):\n";
    for (const auto &row : report.matrix.row_data()) {
        text << "  " << row << "\n";
    }
    text << "r0: " << report.offset << "\n"
         << calls_line(report.total_quantum_calls, report.classical_calls)
         << "classical deterministic baseline: " << baseline_f.classical_calls() << " calls (n + 1)\n";
    emit(config, std::move(json), text.str(), out);
    return EXIT_OK;
}

int run_dropbit(const RunConfig &config, std::ostream &out) {
    auto f = make_oracle(config);
    auto report = detect_dropped_bit_report(f, config.backend, config.seed);
    std::ostringstream text;
    text << "bit-drop detection, n = " << f.n() << "\n"
         << runs_text(report.runs) << "dropped bit: " << report.dropped << "\n"
         << calls_line(report.total_quantum_calls, 0);
    emit(config, to_json(report), text.str(), out);
    return EXIT_OK;
}

std::string ket(size_t index, size_t n, size_t m) {
    std::string s = "|" + BitString(n, static_cast<uint32_t>(index >> m)).str() + ">";
    if (m > 0) {
        s += "|" + BitString(m, static_cast<uint32_t>(index & ((size_t{1} << m) - 1))).str() + ">";
    }
    return s;
}

template <typename Amps>
DemoStage summarize(std::string name, std::string description, const Amps &amps, size_t n, size_t m) {
    DemoStage stage{std::move(name), std::move(description), 0, 0.0, {}};
    for (size_t k = 0; k < amps.size(); k++) {
        double magnitude = std::abs(amps[k]);
        if (magnitude > SINGLE_OP_TOLERANCE) {
            stage.nonzero++;
            stage.max_magnitude = std::max(stage.max_magnitude, magnitude);
        }
    }
    if (stage.nonzero <= 8) {
        for (size_t k = 0; k < amps.size(); k++) {
            if (std::abs(amps[k]) > SINGLE_OP_TOLERANCE) {
                stage.terms.emplace_back(ket(k, n, m), std::real(amps[k]));
            }
        }
    }
    return stage;
}

int run_demo_command(const RunConfig &config, std::ostream &out) {
    auto demo = run_demo();
    nlohmann::json json = {{"problem", "demo"}, {"n", 3}, {"m", 2}, {"marker", "01"}};
    auto stages = nlohmann::json::array();
    std::ostringstream text;
    text << "f(x2 x1 x0) = x2 x1 (bitdrop:0), n = 3, m = 2, marker y = 01\n";
    for (const auto &stage : demo.stages) {
        nlohmann::json terms = nlohmann::json::array();
        for (const auto &[k, a] : stage.terms) {
            terms.push_back({{"ket", k}, {"amplitude", a}});
        }
        stages.push_back(
            {{"name", stage.name},
             {"description", stage.description},
             {"nonzero", stage.nonzero},
             {"max_magnitude", stage.max_magnitude},
             {"terms", terms}});
        text << stage.name << "  " << stage.description << ": " << stage.nonzero << " nonzero amplitude"
             << (stage.nonzero == 1 ? "" : "s") << ", max |a| = " << std::setprecision(6) << stage.max_magnitude
             << "\n";
        for (const auto &[k, a] : stage.terms) {
            text << "    " << (a < 0 ? "-" : "+") << std::fixed << std::setprecision(6) << std::abs(a) << " " << k
                 << "\n";
            text << std::defaultfloat;
        }
    }
    json["stages"] = stages;
    json["outcomes"] = {{"full", demo.full_outcome.str()}, {"compact", demo.compact_outcome.str()}};
    json["outcome"] = demo.full_outcome.str();
    text << "outcome (full backend): " << demo.full_outcome << " with probability " << std::setprecision(6)
         << demo.full_probability << "\n"
         << "outcome (compact backend): " << demo.compact_outcome << "\n"
         << "outcome: " << demo.full_outcome << "\n";
    emit(config, std::move(json), text.str(), out);
    return EXIT_OK;
}

BackendChoice parse_backend(const std::string &name) {
    if (name == "full") {
        return BackendChoice::Full;
    }
    if (name == "compact") {
        return BackendChoice::Compact;
    }
    return BackendChoice::Auto;
}

}  // namespace

BooleanFunction make_oracle(const RunConfig &config) {
    const std::string &spec = config.oracle;
    if (spec.empty()) {
        throw UsageError("an oracle is required (--oracle or --gen)");
    }
    if (spec.rfind("table:", 0) == 0) {
        auto f = load_truth_table(spec.substr(6));
        if ((config.n && *config.n != f.n()) || (config.m && *config.m != f.m())) {
            throw UsageError("--n/--m disagree with the truth-table header");
        }
        return f;
    }
    if (spec.rfind("bitdrop:", 0) == 0) {
        size_t n = require_n(config);
        size_t j = 0;
        try {
            size_t used = 0;
            j = std::stoul(spec.substr(8), &used);
            if (used != spec.size() - 8) {
                throw std::invalid_argument(spec);
            }
        } catch (const std::logic_error &) {
            throw UsageError("bad bit index in oracle spec '" + spec + "'");
        }
        if (config.m && *config.m + 1 != n) {
            throw UsageError("bitdrop oracles have m = n - 1");
        }
        if (j >= n) {
            throw UsageError("bitdrop index must be below n");
        }
        return BooleanFunction::bit_drop(n, j);
    }
    size_t n = require_n(config);
    size_t m = config.m.value_or(1);
    if (spec == "constant") {
        return random_promise_instance(n, m, PromiseKind::Constant, config.seed);
    }
    if (spec == "balanced") {
        return random_promise_instance(n, m, PromiseKind::Balanced, config.seed);
    }
    if (spec == "affine") {
        return random_affine_instance(n, m, config.seed);
    }
    throw UsageError("unknown oracle spec '" + spec + "'");
}

DemoResult run_demo() {
    constexpr size_t n = 3;
    constexpr size_t m = 2;
    const auto f = BooleanFunction::bit_drop(n, 0);
    const auto marker = BitString::parse("01");

    DemoResult result;
    StateVector state = basis_state(n, m, BitString::zero(n), BitString::zero(m));
    result.stages.push_back(summarize("phi_0", "|000>|00>", state.amplitudes(), n, m));
    apply_x(state, 0);
    result.stages.push_back(summarize("phi_1", "X on qubit 0 (second register = 01)", state.amplitudes(), n, m));
    apply_h(state, all_qubits(state));
    result.stages.push_back(summarize("phi_2", "H on all 5 qubits", state.amplitudes(), n, m));
    apply_oracle(state, f);
    result.stages.push_back(summarize("phi_3", "U_f", state.amplitudes(), n, m));
    auto first = first_register_amplitudes(state, n, marker);
    result.stages.push_back(summarize("phi_4", "first register, |gamma_01> factored out", first, n, 0));
    apply_h(state, first_register(n, m));
    auto final_first = first_register_amplitudes(state, n, marker);
    result.stages.push_back(summarize("phi_5", "H_3 on first register", final_first, n, 0));

    auto measured = measure_first_register_deterministic(state, n);
    result.full_outcome = measured.value;
    result.full_probability = measured.probability;
    auto compact = gpk_final_amplitudes(f, marker);
    std::vector<double> probs(compact.size());
    for (size_t k = 0; k < compact.size(); k++) {
        probs[k] = compact[k] * compact[k];
    }
    result.compact_outcome = BitString(n, static_cast<uint32_t>(dominant_index(probs)));
    return result;
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    try {
        switch (config.command) {
            case Command::Gpk:
                return run_gpk(config, out);
            case Command::Dj:
                return run_dj(config, out);
            case Command::Bv:
                return run_bv(config, out);
            case Command::Gbv:
                return run_gbv(config, out);
            case Command::DropBit:
                return run_dropbit(config, out);
            case Command::Demo:
                return run_demo_command(config, out);
        }
    } catch (const UsageError &e) {
        err << "usage error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const GpkError &e) {
        err << "error (" << command_name(config.command) << "): " << e.what() << "\n";
        return EXIT_ORACLE;
    }
    return EXIT_USAGE;
}

int main_with_args(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Generalized phase kick-back simulator", "gpk"};
    app.footer(ORACLE_GRAMMAR);
    app.require_subcommand(1);

    RunConfig config;
    size_t n = 0;
    size_t m = 0;
    std::string marker;
    std::vector<std::string> basis;
    std::string backend = "auto";
    std::string output = "text";

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--n", n, "Input width");
        sub->add_option("--m", m, "Output width");
        sub->add_option("--oracle,--gen", config.oracle, "Oracle spec (see grammar below)");
        sub->add_option("--backend", backend, "Simulation backend")
            ->check(CLI::IsMember({"full", "compact", "auto"}));
        sub->add_option("--seed", config.seed, "Seed for generators and measurement sampling");
        sub->add_option("--output", output, "Report format")->check(CLI::IsMember({"json", "text"}));
        sub->add_flag("--timestamp", config.timestamp, "Include a timestamp field in JSON output");
        sub->footer(ORACLE_GRAMMAR);
    };

    struct Entry {
        Command command;
        const char *name;
        const char *help;
    };
    const Entry entries[] = {
        {Command::Dj, "dj", "Generalized constant-vs-balanced (m GPK runs + 1 classical call)"},
        {Command::Bv, "bv", "Bernstein-Vazirani, m = 1, with classical offset recovery"},
        {Command::Gbv, "gbv", "Generalized Bernstein-Vazirani: recover (R, r0)"},
        {Command::Gpk, "gpk", "Single GPK run with a given marker"},
        {Command::DropBit, "dropbit", "Find the input bit deleted by an n -> n-1 bit-drop"},
        {Command::Demo, "demo", "Step through the n = 3, m = 2 worked example"},
    };
    std::vector<std::pair<CLI::App *, Command>> subs;
    for (const auto &e : entries) {
        auto *sub = app.add_subcommand(e.name, e.help);
        add_common(sub);
        if (e.command == Command::Gpk) {
            sub->add_option("--marker", marker, "Marker y (m bits)")->required();
        }
        if (e.command == Command::Dj || e.command == Command::Gbv) {
            sub->add_option("--basis", basis, "Comma-separated marker basis of F2^m")->delimiter(',');
        }
        subs.emplace_back(sub, e.command);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        app.exit(e, out, err);
        return EXIT_OK;
    } catch (const CLI::CallForAllHelp &e) {
        app.exit(e, out, err);
        return EXIT_OK;
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return EXIT_USAGE;
    }

    for (const auto &[sub, command] : subs) {
        if (sub->parsed()) {
            config.command = command;
            if (sub->count("--n")) {
                config.n = n;
            }
            if (sub->count("--m")) {
                config.m = m;
            }
            if (sub->get_option_no_throw("--marker") && sub->count("--marker")) {
                config.marker = marker;
            }
            if (sub->get_option_no_throw("--basis") && sub->count("--basis")) {
                config.basis = basis;
            }
        }
    }
    config.backend = parse_backend(backend);
    config.output = output == "json" ? OutputFormat::Json : OutputFormat::Text;
    return run(config, out, err);
}

}  // namespace gpk::cli

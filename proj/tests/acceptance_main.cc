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

// Acceptance suite. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "gpk/errors.h"
#include "gpk/gpk.h"
#include "gpk/oracle.h"
#include "gpk/statevector.h"
#include "reference.h"

using namespace gpk;

namespace {

struct Outcome {
    bool pass;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

std::vector<BitString> random_noncanonical_basis(size_t m, std::mt19937_64 &rng) {
    for (;;) {
        std::vector<BitString> rows;
        std::vector<std::vector<bool>> bools;
        bool canonical = true;
        for (size_t i = 0; i < m; i++) {
            uint32_t v = static_cast<uint32_t>(rng() & ((1u << m) - 1));
            rows.emplace_back(m, v);
            canonical = canonical && v == (1u << i);
            std::vector<bool> row(m);
            for (size_t k = 0; k < m; k++) {
                row[k] = (v >> k) & 1u;
            }
            bools.push_back(row);
        }
        if (!canonical && reference::rank_bool(bools) == m) {
            return rows;
        }
    }
}

Outcome worked_example() {
    auto start = Clock::now();
    double worst = 0;
    bool ok = true;
    for (auto backend : {BackendChoice::Full, BackendChoice::Compact}) {
        auto f = BooleanFunction::bit_drop(3, 0);
        auto run = gpk_run(f, BitString::parse("01"), backend, 0);
        worst = std::max(worst, std::abs(run.probability - 1.0));
        ok = ok && run.outcome == BitString::parse("010") && std::abs(run.probability - 1.0) <= 1e-9;
    }
    double elapsed = seconds_since(start);
    ok = ok && elapsed < 1.0;
    return {ok, fmt("outcome 010 on full and compact, |p-1| max %.2e, %.4f s", worst, elapsed)};
}

Outcome eigenphase_suite() {
    std::mt19937_64 rng(2001);
    size_t checks = 0;
    size_t failures = 0;
    double worst = 0;
    for (size_t n = 1; n <= 4; n++) {
        for (size_t m = 1; m <= 4; m++) {
            for (int t = 0; t < 20; t++) {
                auto f = reference::random_table(n, m, rng);
                for (uint32_t x = 0; x < (1u << n); x++) {
                    for (uint32_t y = 0; y < (1u << m); y++) {
                        // |x> (x) |gamma_y> built from the tensor reference.
                        auto gamma = reference::gamma_tensor(BitString(m, y));
                        std::vector<Amplitude> amps(size_t{1} << (n + m));
                        for (size_t k = 0; k < gamma.size(); k++) {
                            amps[(size_t{x} << m) | k] = gamma[k];
                        }
                        StateVector s(n + m, amps);
                        apply_oracle(s, f);
                        double sign = reference::dot(f.peek(x), y, m) ? -1.0 : 1.0;
                        bool ok = true;
                        for (size_t k = 0; k < amps.size(); k++) {
                            double d = std::abs(s[k] - sign * amps[k]);
                            worst = std::max(worst, d);
                            ok = ok && d <= 1e-12;
                        }
                        checks++;
                        failures += ok ? 0 : 1;
                    }
                }
            }
        }
    }
    return {failures == 0,
            fmt("%zu (f, x, y) checks over 320 tables, %zu failures, max deviation %.2e", checks, failures, worst)};
}

Outcome generalized_dj() {
    auto start = Clock::now();
    size_t instances = 0;
    size_t wrong = 0;
    uint64_t seed = 3000;
    for (size_t n = 2; n <= 10; n++) {
        for (size_t m = 1; m <= 6; m++) {
            for (int t = 0; t < 20; t++, seed++) {
                auto kind = t % 2 ? PromiseKind::Balanced : PromiseKind::Constant;
                auto f = random_promise_instance(n, m, kind, seed);
                auto truth = classify_promise(f);
                auto report = solve_generalized_dj(f, std::nullopt, BackendChoice::Auto, seed);
                bool ok = (report.verdict == DjVerdict::Balanced) == (truth.kind == PromiseKind::Balanced) &&
                          report.total_quantum_calls == m && f.quantum_calls() == m;
                if (truth.kind == PromiseKind::Balanced) {
                    std::set<BitString> got(report.values.begin(), report.values.end());
                    ok = ok && got == std::set<BitString>{truth.first, truth.second} && report.classical_calls == 1;
                }
                instances++;
                wrong += ok ? 0 : 1;
            }
        }
    }
    double elapsed = seconds_since(start);
    return {wrong == 0 && instances >= 1000 && elapsed < 60.0,
            fmt("%zu instances, n 2..10, m 1..6, %zu mismatches, m quantum calls each, %.2f s", instances, wrong,
                elapsed)};
}

Outcome basis_independence() {
    std::mt19937_64 rng(4001);
    size_t agree = 0;
    const size_t total = 100;
    for (size_t i = 0; i < total; i++) {
        size_t m = 2 + i % 4;
        size_t n = 2 + (i / 4) % 6;
        auto kind = i % 3 ? PromiseKind::Balanced : PromiseKind::Constant;
        auto f = random_promise_instance(n, m, kind, 4001 + i);
        auto canonical = solve_generalized_dj(f, std::nullopt, BackendChoice::Auto, i);
        auto other = solve_generalized_dj(f, random_noncanonical_basis(m, rng), BackendChoice::Auto, i);
        agree += canonical.lambda == other.lambda && canonical.verdict == other.verdict ? 1 : 0;
    }
    return {agree == total, fmt("%zu/%zu instances, m 2..5, lambda identical", agree, total)};
}

Outcome generalized_bv() {
    size_t instances = 0;
    size_t wrong = 0;
    uint64_t quantum_total = 0;
    uint64_t classical_total = 0;
    uint64_t baseline_total = 0;
    uint64_t expected_quantum = 0;
    uint64_t expected_baseline = 0;
    for (size_t n = 1; n <= 10; n++) {
        for (size_t m = 1; m <= 6; m++) {
            for (int t = 0; t < 9; t++) {
                uint64_t seed = 5000 + instances;
                auto f = random_affine_instance(n, m, seed);
                auto report = solve_generalized_bv(f, std::nullopt, BackendChoice::Auto, seed);
                bool ok = report.total_quantum_calls == m && report.classical_calls == 1;
                for (uint32_t x = 0; ok && x < (1u << n); x++) {
                    ok = (mat_vec(report.matrix, BitString(n, x)) ^ report.offset).value() == f.peek(x);
                }
                BooleanFunction baseline = f;
                baseline.reset_counters();
                auto fit = classical_bv_solver(baseline);
                ok = ok && baseline.classical_calls() == n + 1 && fit.matrix == report.matrix &&
                     fit.offset == report.offset;
                quantum_total += report.total_quantum_calls;
                classical_total += report.classical_calls;
                baseline_total += baseline.classical_calls();
                expected_quantum += m;
                expected_baseline += n + 1;
                instances++;
                wrong += ok ? 0 : 1;
            }
        }
    }
    bool pass = wrong == 0 && instances >= 500 && quantum_total == expected_quantum && classical_total == instances &&
                baseline_total == expected_baseline;
    return {pass, fmt("%zu instances, %zu failures; quantum m+1 route: %llu quantum + %llu classical calls; "
                      "classical route: %llu calls (n+1 each)",
                      instances, wrong, static_cast<unsigned long long>(quantum_total),
                      static_cast<unsigned long long>(classical_total),
                      static_cast<unsigned long long>(baseline_total))};
}

Outcome single_output_special_cases() {
    size_t dj_ok = 0;
    size_t bv_ok = 0;
    std::mt19937_64 rng(6001);
    for (uint64_t i = 0; i < 200; i++) {
        size_t n = 1 + i % 10;
        auto kind = i % 2 ? PromiseKind::Balanced : PromiseKind::Constant;
        auto f = random_promise_instance(n, 1, kind, 6001 + i);
        auto verdict = solve_classic_dj(f, i);
        dj_ok += (verdict == DjVerdict::Balanced) == (kind == PromiseKind::Balanced) && f.quantum_calls() == 1 &&
                         f.classical_calls() == 0
                     ? 1
                     : 0;

        BitString r(n, static_cast<uint32_t>(rng() & ((1u << n) - 1)));
        auto g = BooleanFunction::affine(F2Matrix(std::vector<BitString>{r}), BitString::zero(1));
        bv_ok += solve_bv(g, i) == r && g.quantum_calls() == 1 && g.classical_calls() == 0 ? 1 : 0;
    }
    return {dj_ok == 200 && bv_ok == 200, fmt("DJ %zu/200, BV %zu/200, one quantum call each", dj_ok, bv_ok)};
}

Outcome classical_worst_case() {
    bool ok = true;
    std::ostringstream calls;
    for (size_t n = 3; n <= 12; n++) {
        auto f = adversarial_balanced_instance(n, BitString::zero(1), BitString::parse("1"));
        auto result = classical_dj_solver(f);
        uint64_t expected = (uint64_t{1} << (n - 1)) + 1;
        ok = ok && result.kind == PromiseKind::Balanced && f.classical_calls() == expected;
        calls << (n == 3 ? "" : ",") << f.classical_calls();
    }
    return {ok, "evaluations for n=3..12: " + calls.str()};
}

Outcome translation_invariance() {
    std::mt19937_64 rng(8001);
    size_t ok_count = 0;
    double worst = 0;
    const uint64_t seeds[] = {0, 1, 2, 3};
    for (int t = 0; t < 100; t++) {
        size_t n = 1 + rng() % 5;
        size_t m = 1 + rng() % 4;
        auto f = reference::random_table(n, m, rng);
        BitString s(m, static_cast<uint32_t>(rng() & ((1u << m) - 1)));
        BitString y(m, static_cast<uint32_t>(rng() & ((1u << m) - 1)));
        bool ok = translation_invariance_check(f, s, y, seeds);
        auto a = gpk_final_amplitudes(f, y);
        auto b = gpk_final_amplitudes(translate(f, s), y);
        double sign = dot(s, y) ? -1.0 : 1.0;
        for (size_t z = 0; z < a.size(); z++) {
            worst = std::max(worst, std::abs(a[z] * a[z] - b[z] * b[z]));
            ok = ok && b[z] == sign * a[z];
        }
        ok_count += ok ? 1 : 0;
    }
    return {ok_count == 100,
            fmt("%zu/100 triples, max distribution gap %.2e, amplitudes equal up to exact sign", ok_count, worst)};
}

Outcome backend_equivalence() {
    std::mt19937_64 rng(9001);
    size_t tables = 0;
    size_t failures = 0;
    double worst = 0;
    for (size_t n = 1; n <= 4; n++) {
        for (size_t m = 1; m <= 3; m++) {
            for (int t = 0; t < 20; t++, tables++) {
                auto f = reference::random_table(n, m, rng);
                for (uint32_t y = 0; y < (1u << m); y++) {
                    BitString marker(m, y);
                    auto full = first_register_amplitudes(gpk_final_state(f, marker), n, marker);
                    auto compact = gpk_final_amplitudes(f, marker);
                    for (size_t z = 0; z < compact.size(); z++) {
                        double d = std::abs(full[z] - Amplitude(compact[z]));
                        worst = std::max(worst, d);
                        failures += d <= 1e-9 ? 0 : 1;
                    }
                }
            }
        }
    }
    return {failures == 0 && tables >= 200,
            fmt("%zu tables, n 1..4, m 1..3, every marker, max deviation %.2e", tables, worst)};
}

Outcome bit_drop_detection() {
    size_t cases = 0;
    size_t ok_count = 0;
    for (size_t n = 2; n <= 8; n++) {
        for (size_t j = 0; j < n; j++) {
            auto f = BooleanFunction::bit_drop(n, j);
            bool ok = false;
            try {
                ok = detect_dropped_bit(f, j) == j && f.quantum_calls() == n - 1;
            } catch (const GpkError &) {
                ok = false;
            }
            cases++;
            ok_count += ok ? 1 : 0;
        }
    }
    return {ok_count == cases, fmt("%zu/%zu (n, j) pairs, n 2..8, n-1 quantum calls each", ok_count, cases)};
}

}  // namespace

int main() {
    struct Criterion {
        const char *name;
        std::function<Outcome()> check;
    };
    const Criterion criteria[] = {
        {"worked example f(xyz)=xy, marker 01", worked_example},
        {"eigenphase of U_f on |x>|gamma_y>", eigenphase_suite},
        {"generalized constant-vs-balanced", generalized_dj},
        {"marker basis independence", basis_independence},
        {"generalized affine recovery", generalized_bv},
        {"single-output DJ and BV", single_output_special_cases},
        {"classical adversarial worst case", classical_worst_case},
        {"translation invariance", translation_invariance},
        {"full vs compact backend", backend_equivalence},
        {"bit-drop detection", bit_drop_detection},
    };
    int failed = 0;
    int index = 1;
    for (const auto &c : criteria) {
        Outcome outcome;
        try {
            outcome = c.check();
        } catch (const std::exception &e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] AC%d %s: %s\n", outcome.pass ? "PASS" : "FAIL", index, c.name, outcome.detail.c_str());
        failed += outcome.pass ? 0 : 1;
        index++;
    }
    std::printf("%d/%d criteria passed\n", index - 1 - failed, index - 1);
    return failed == 0 ? 0 : 1;
}

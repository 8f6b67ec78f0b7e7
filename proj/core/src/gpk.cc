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

#include "gpk/gpk.h"

#include <cmath>

#include "gpk/errors.h"
#include "gpk/rng.h"

namespace gpk {

namespace {

std::vector<BitString> canonical_markers(size_t m) {
    std::vector<BitString> out;
    out.reserve(m);
    for (size_t i = 0; i < m; i++) {
        out.push_back(BitString::unit(m, i));
    }
    return out;
}

bool is_canonical(std::span<const BitString> markers) {
    for (size_t i = 0; i < markers.size(); i++) {
        if (markers[i] != BitString::unit(markers.size(), i)) {
            return false;
        }
    }
    return true;
}

std::vector<BitString> checked_markers(std::optional<std::vector<BitString>> markers, size_t m) {
    if (!markers) {
        return canonical_markers(m);
    }
    for (const auto &y : *markers) {
        if (y.len() != m) {
            throw GpkError(ErrorCode::NotABasis, "marker '" + y.str() + "' does not have length m = " + std::to_string(m));
        }
    }
    if (!is_basis(*markers, m)) {
        throw GpkError(ErrorCode::NotABasis, "markers do not form a basis of F2^" + std::to_string(m));
    }
    return std::move(*markers);
}

void require_single_output(const BooleanFunction &f, const char *solver) {
    if (f.m() != 1) {
        throw GpkError(
            ErrorCode::WrongShape, std::string(solver) + " needs m = 1, got m = " + std::to_string(f.m()));
    }
}

// Promise-satisfying functions put probability exactly 0 or 1 on outcome 0.
void check_zero_probability(const GpkRunRecord &run) {
    double p = run.zero_probability;
    if (p > PIPELINE_TOLERANCE && p < 1.0 - PIPELINE_TOLERANCE) {
        throw GpkError(
            ErrorCode::PromiseViolated,
            "marker " + run.marker.str() + " gives outcome 0 with probability " + std::to_string(p) +
                "; f is neither constant nor balanced");
    }
}

std::vector<double> squared(const std::vector<double> &amps) {
    std::vector<double> out(amps.size());
    for (size_t k = 0; k < amps.size(); k++) {
        out[k] = amps[k] * amps[k];
    }
    return out;
}

}  // namespace

std::string backend_name(Backend backend) {
    return backend == Backend::Full ? "full" : "compact";
}

Backend resolve_backend(BackendChoice choice, size_t n, size_t m) {
    switch (choice) {
        case BackendChoice::Full:
            return Backend::Full;
        case BackendChoice::Compact:
            return Backend::Compact;
        case BackendChoice::Auto:
            break;
    }
    return n + m > 20 ? Backend::Compact : Backend::Full;
}

StateVector gpk_final_state(const BooleanFunction &f, const BitString &marker) {
    const size_t n = f.n();
    const size_t m = f.m();
    if (marker.len() != m) {
        throw GpkError(ErrorCode::LengthMismatch, "marker length must equal the output width m");
    }
    if (n + m > MAX_QUBITS) {
        throw GpkError(
            ErrorCode::TooLarge, "n + m = " + std::to_string(n + m) + " exceeds the full backend limit of 24 qubits");
    }
    StateVector state = basis_state(n, m, BitString::zero(n), BitString::zero(m));
    for (size_t i = 0; i < m; i++) {
        if (marker[i]) {
            apply_x(state, i);
        }
    }
    apply_h(state, all_qubits(state));
    apply_oracle(state, f);
    apply_h(state, first_register(n, m));
    return state;
}

std::vector<double> gpk_final_amplitudes(const BooleanFunction &f, const BitString &marker) {
    return compact_final_transform(compact_gpk_run(f, marker));
}

GpkRunRecord gpk_run(const BooleanFunction &f, const BitString &marker, BackendChoice choice, uint64_t seed) {
    const Backend backend = resolve_backend(choice, f.n(), f.m());
    const uint64_t calls_before = f.quantum_calls();
    std::vector<double> probs;
    if (backend == Backend::Full) {
        probs = first_register_probabilities(gpk_final_state(f, marker), f.n());
    } else {
        probs = squared(gpk_final_amplitudes(f, marker));
    }
    const size_t k = sample_index(probs, seed);
    return GpkRunRecord{
        .marker = marker,
        .outcome = BitString(f.n(), static_cast<uint32_t>(k)),
        .backend = backend,
        .seed = seed,
        .quantum_oracle_calls = f.quantum_calls() - calls_before,
        .deterministic = probs[k] > 1.0 - PIPELINE_TOLERANCE,
        .probability = probs[k],
        .zero_probability = probs[0],
    };
}

std::string verdict_name(DjVerdict verdict) {
    return verdict == DjVerdict::Constant ? "Constant" : "Balanced";
}

DjReport solve_generalized_dj(
    const BooleanFunction &f, std::optional<std::vector<BitString>> markers, BackendChoice backend, uint64_t seed) {
    const size_t n = f.n();
    const size_t m = f.m();
    auto basis = checked_markers(std::move(markers), m);
    const uint64_t quantum_before = f.quantum_calls();
    const uint64_t classical_before = f.classical_calls();

    std::vector<GpkRunRecord> runs;
    runs.reserve(m);
    for (size_t i = 0; i < m; i++) {
        runs.push_back(gpk_run(f, basis[i], backend, derive_seed(seed, i)));
        check_zero_probability(runs.back());
    }

    BitString lambda = BitString::zero(m);
    if (is_canonical(basis)) {
        // lambda_i = 0 iff delta_i = 0.
        for (size_t i = 0; i < m; i++) {
            lambda = lambda.with_bit(i, !runs[i].outcome.is_zero());
        }
    } else {
        F2LinearSystem system(m);
        for (size_t i = 0; i < m; i++) {
            system.add(basis[i], !runs[i].outcome.is_zero());
        }
        auto solved = solve_f2(system);
        if (solved.status != SolveStatus::Unique) {
            throw GpkError(ErrorCode::PromiseViolated, "marker outcomes do not determine lambda uniquely");
        }
        lambda = solved.solution;
    }

    const DjVerdict verdict = lambda.is_zero() ? DjVerdict::Constant : DjVerdict::Balanced;
    const BitString f0 = f.evaluate(BitString::zero(n));
    std::vector<BitString> values{f0};
    if (verdict == DjVerdict::Balanced) {
        values.push_back(f0 ^ lambda);
    }
    return DjReport{
        .n = n,
        .m = m,
        .verdict = verdict,
        .lambda = lambda,
        .values = std::move(values),
        .markers = std::move(basis),
        .runs = std::move(runs),
        .total_quantum_calls = f.quantum_calls() - quantum_before,
        .classical_calls = f.classical_calls() - classical_before,
        .seed = seed,
    };
}

DjVerdict solve_classic_dj(const BooleanFunction &f, uint64_t seed) {
    require_single_output(f, "the Deutsch-Jozsa solver");
    auto run = gpk_run(f, BitString(1, 1), BackendChoice::Auto, seed);
    check_zero_probability(run);
    return run.outcome.is_zero() ? DjVerdict::Constant : DjVerdict::Balanced;
}

BitString solve_bv(const BooleanFunction &f, uint64_t seed) {
    require_single_output(f, "the Bernstein-Vazirani solver");
    auto run = gpk_run(f, BitString(1, 1), BackendChoice::Auto, seed);
    if (!run.deterministic) {
        throw GpkError(ErrorCode::NotAffine, "measurement was not deterministic; f is not of the form r.x");
    }
    return run.outcome;
}

ModifiedBvResult solve_modified_bv(const BooleanFunction &f, uint64_t seed) {
    BitString r = solve_bv(f, seed);
    bool offset = f.evaluate(BitString::zero(f.n()))[0];
    return {r, offset};
}

BvReport solve_generalized_bv(
    const BooleanFunction &f, std::optional<std::vector<BitString>> markers, BackendChoice backend, uint64_t seed) {
    const size_t n = f.n();
    const size_t m = f.m();
    auto basis = checked_markers(std::move(markers), m);
    const uint64_t quantum_before = f.quantum_calls();
    const uint64_t classical_before = f.classical_calls();

    std::vector<GpkRunRecord> runs;
    std::vector<BitString> outcomes;
    runs.reserve(m);
    outcomes.reserve(m);
    for (size_t i = 0; i < m; i++) {
        runs.push_back(gpk_run(f, basis[i], backend, derive_seed(seed, i)));
        if (!runs.back().deterministic) {
            throw GpkError(
                ErrorCode::NotAffine, "GPK(" + basis[i].str() + ") was not deterministic; f has no affine form");
        }
        outcomes.push_back(runs.back().outcome);
    }

    F2Matrix in_basis(n, std::move(outcomes));
    F2Matrix change = inverse(F2Matrix(m, basis));
    F2Matrix matrix = mat_mul(change, in_basis);
    BitString offset = f.evaluate(BitString::zero(n));

    if (n <= 10 && !affine_fit_matches(f, matrix, offset)) {
        throw GpkError(ErrorCode::NotAffine, "recovered (R, r0) does not reproduce f");
    }
    return BvReport{
        .n = n,
        .m = m,
        .matrix = std::move(matrix),
        .offset = offset,
        .markers = std::move(basis),
        .marker_basis_matrix = std::move(in_basis),
        .change_of_basis = std::move(change),
        .runs = std::move(runs),
        .total_quantum_calls = f.quantum_calls() - quantum_before,
        .classical_calls = f.classical_calls() - classical_before,
        .seed = seed,
    };
}

DropBitReport detect_dropped_bit_report(const BooleanFunction &f, BackendChoice backend, uint64_t seed) {
    const size_t n = f.n();
    if (n < 2 || f.m() != n - 1) {
        throw GpkError(ErrorCode::NotABitDrop, "a bit-dropping function maps n bits to n - 1 bits");
    }
    const uint64_t quantum_before = f.quantum_calls();
    std::vector<GpkRunRecord> runs;
    runs.reserve(n - 1);
    uint32_t seen = 0;
    for (size_t i = 0; i + 1 < n; i++) {
        runs.push_back(gpk_run(f, BitString::unit(n - 1, i), backend, derive_seed(seed, i)));
        const auto &run = runs.back();
        if (!run.deterministic || run.outcome.popcount() != 1 || (seen & run.outcome.value())) {
            throw GpkError(
                ErrorCode::NotABitDrop,
                "GPK(e_" + std::to_string(i) + ") gave " + run.outcome.str() +
                    ", not a fresh canonical vector with certainty");
        }
        seen |= run.outcome.value();
    }
    const uint32_t missing = ~seen & ((uint32_t{1} << n) - 1);
    return DropBitReport{
        .n = n,
        .dropped = static_cast<size_t>(std::countr_zero(missing)),
        .runs = std::move(runs),
        .total_quantum_calls = f.quantum_calls() - quantum_before,
        .seed = seed,
    };
}

size_t detect_dropped_bit(const BooleanFunction &f, uint64_t seed) {
    return detect_dropped_bit_report(f, BackendChoice::Auto, seed).dropped;
}

bool translation_invariance_check(
    const BooleanFunction &f, const BitString &s, const BitString &marker, std::span<const uint64_t> seeds) {
    BooleanFunction shifted = translate(f, s);
    auto original = squared(gpk_final_amplitudes(f, marker));
    auto moved = squared(gpk_final_amplitudes(shifted, marker));
    for (size_t k = 0; k < original.size(); k++) {
        if (std::abs(original[k] - moved[k]) > PIPELINE_TOLERANCE) {
            return false;
        }
    }
    for (uint64_t seed : seeds) {
        if (gpk_run(f, marker, BackendChoice::Auto, seed).outcome !=
            gpk_run(shifted, marker, BackendChoice::Auto, seed).outcome) {
            return false;
        }
    }
    return true;
}

}  // namespace gpk

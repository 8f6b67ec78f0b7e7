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

#include "gpk/statevector.h"

#include <ostream>

#include "gpk/errors.h"
#include "gpk/rng.h"

namespace gpk {

namespace {

void check_qubits(size_t qubits) {
    if (qubits > MAX_QUBITS) {
        throw GpkError(
            ErrorCode::TooLarge,
            "the full backend holds at most " + std::to_string(MAX_QUBITS) + " qubits, requested " +
                std::to_string(qubits));
    }
}

void check_layout(const StateVector &state, size_t n) {
    if (n > state.qubits()) {
        throw GpkError(ErrorCode::LengthMismatch, "first register wider than the state");
    }
}

}  // namespace

StateVector::StateVector(size_t qubits) : qubits_(qubits) {
    check_qubits(qubits);
    amplitudes_.assign(size_t{1} << qubits, Amplitude{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

StateVector::StateVector(size_t qubits, std::vector<Amplitude> amplitudes)
    : qubits_(qubits), amplitudes_(std::move(amplitudes)) {
    check_qubits(qubits);
    if (amplitudes_.size() != (size_t{1} << qubits)) {
        throw GpkError(ErrorCode::LengthMismatch, "amplitude count must be 2^qubits");
    }
}

double StateVector::norm_squared() const {
    double total = 0;
    for (const auto &a : amplitudes_) {
        total += std::norm(a);
    }
    return total;
}

StateVector basis_state(size_t n, size_t m, const BitString &first, const BitString &second) {
    if (first.len() != n || second.len() != m) {
        throw GpkError(ErrorCode::LengthMismatch, "register contents do not match register widths");
    }
    check_qubits(n + m);
    StateVector state(n + m);
    state.amplitudes()[0] = 0.0;
    state.amplitudes()[(size_t{first.value()} << m) | second.value()] = 1.0;
    return state;
}

void apply_x(StateVector &state, size_t qubit) {
    if (qubit >= state.qubits()) {
        throw GpkError(ErrorCode::BadIndex, "qubit " + std::to_string(qubit) + " out of range");
    }
    auto amps = state.amplitudes();
    const size_t bit = size_t{1} << qubit;
    for (size_t k = 0; k < amps.size(); k++) {
        if (!(k & bit)) {
            std::swap(amps[k], amps[k | bit]);
        }
    }
}

void apply_h(StateVector &state, QubitRange range) {
    if (range.begin > range.end || range.end > state.qubits()) {
        throw GpkError(ErrorCode::BadIndex, "Hadamard qubit range out of bounds");
    }
    auto amps = state.amplitudes();
    const double scale = 1.0 / std::sqrt(2.0);
    for (size_t q = range.begin; q < range.end; q++) {
        const size_t half = size_t{1} << q;
        for (size_t block = 0; block < amps.size(); block += 2 * half) {
            for (size_t k = block; k < block + half; k++) {
                Amplitude a = amps[k];
                Amplitude b = amps[k + half];
                amps[k] = (a + b) * scale;
                amps[k + half] = (a - b) * scale;
            }
        }
    }
}

void apply_oracle(StateVector &state, const BooleanFunction &f) {
    const size_t n = f.n();
    const size_t m = f.m();
    if (state.qubits() != n + m) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "state has " + std::to_string(state.qubits()) + " qubits but U_f acts on " + std::to_string(n + m));
    }
    auto amps = state.amplitudes();
    const size_t inputs = size_t{1} << n;
    const size_t targets = size_t{1} << m;
    for (size_t x = 0; x < inputs; x++) {
        const size_t fx = f.peek(static_cast<uint32_t>(x));
        if (fx == 0) {
            continue;
        }
        Amplitude *row = amps.data() + (x << m);
        for (size_t y = 0; y < targets; y++) {
            size_t partner = y ^ fx;
            if (y < partner) {
                std::swap(row[y], row[partner]);
            }
        }
    }
    f.record_quantum_call();
    f.record_simulator_evaluations(inputs);
}

StateVector gamma_state(const BitString &y) {
    StateVector state = basis_state(0, y.len(), BitString(), y);
    apply_h(state, all_qubits(state));
    return state;
}

std::vector<double> first_register_probabilities(const StateVector &state, size_t n) {
    check_layout(state, n);
    const size_t m = state.qubits() - n;
    std::vector<double> probs(size_t{1} << n, 0.0);
    auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        probs[k >> m] += std::norm(amps[k]);
    }
    return probs;
}

size_t sample_index(std::span<const double> probabilities, uint64_t seed) {
    SplitMix64 rng(seed);
    double u = rng.unit_double();
    double cumulative = 0;
    size_t last_nonzero = 0;
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] <= 0) {
            continue;
        }
        last_nonzero = k;
        cumulative += probabilities[k];
        if (u < cumulative) {
            return k;
        }
    }
    // Rounding left total mass slightly below u.
    return last_nonzero;
}

size_t dominant_index(std::span<const double> probabilities) {
    for (size_t k = 0; k < probabilities.size(); k++) {
        if (probabilities[k] > 1.0 - PIPELINE_TOLERANCE) {
            return k;
        }
    }
    throw GpkError(ErrorCode::NotDeterministic, "no measurement outcome has probability 1");
}

MeasurementOutcome measure_first_register(const StateVector &state, size_t n, uint64_t seed) {
    auto probs = first_register_probabilities(state, n);
    size_t k = sample_index(probs, seed);
    return {BitString(n, static_cast<uint32_t>(k)), probs[k]};
}

MeasurementOutcome measure_first_register_deterministic(const StateVector &state, size_t n) {
    auto probs = first_register_probabilities(state, n);
    size_t k = dominant_index(probs);
    return {BitString(n, static_cast<uint32_t>(k)), probs[k]};
}

std::vector<Amplitude> first_register_amplitudes(const StateVector &state, size_t n, const BitString &y) {
    check_layout(state, n);
    const size_t m = state.qubits() - n;
    if (y.len() != m) {
        throw GpkError(ErrorCode::LengthMismatch, "marker length does not match the second register");
    }
    const double scale = 1.0 / std::sqrt(static_cast<double>(size_t{1} << m));
    std::vector<Amplitude> out(size_t{1} << n);
    auto amps = state.amplitudes();
    for (size_t x = 0; x < out.size(); x++) {
        Amplitude total = 0;
        for (size_t z = 0; z < (size_t{1} << m); z++) {
            double sign = dot_words(y.value(), z) ? -1.0 : 1.0;
            total += sign * amps[(x << m) | z];
        }
        out[x] = total * scale;
    }
    return out;
}

PhaseVector compact_gpk_run(const BooleanFunction &f, const BitString &y) {
    if (f.n() > MAX_COMPACT_INPUT_BITS) {
        throw GpkError(
            ErrorCode::TooLarge,
            "the compact backend supports n <= " + std::to_string(MAX_COMPACT_INPUT_BITS) + ", got " +
                std::to_string(f.n()));
    }
    if (y.len() != f.m()) {
        throw GpkError(ErrorCode::LengthMismatch, "marker length must equal the output width m");
    }
    const size_t inputs = size_t{1} << f.n();
    PhaseVector out{f.n(), std::vector<int8_t>(inputs, 1), y};
    for (size_t x = 0; x < inputs; x++) {
        if (dot_words(f.peek(static_cast<uint32_t>(x)), y.value())) {
            out.signs[x] = -1;
        }
    }
    f.record_quantum_call();
    f.record_simulator_evaluations(inputs);
    return out;
}

std::vector<double> compact_final_transform(const PhaseVector &phases) {
    std::vector<double> amps(phases.signs.begin(), phases.signs.end());
    walsh_hadamard(std::span<double>(amps));
    const double scale = 1.0 / static_cast<double>(size_t{1} << phases.n);
    for (auto &a : amps) {
        a *= scale;
    }
    return amps;
}

void dump_state(std::ostream &out, const StateVector &state) {
    auto amps = state.amplitudes();
    for (size_t k = 0; k < amps.size(); k++) {
        out << k << ' ' << amps[k].real() << ' ' << amps[k].imag() << '\n';
    }
}

}  // namespace gpk

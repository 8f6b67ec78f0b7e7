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

#ifndef GPK_STATEVECTOR_H
#define GPK_STATEVECTOR_H

#include <cmath>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "gpk/bitstring.h"
#include "gpk/oracle.h"

namespace gpk {

using Amplitude = std::complex<double>;

/// Absolute tolerance for comparing the result of a single gate.
inline constexpr double SINGLE_OP_TOLERANCE = 1e-12;
/// Absolute tolerance for comparing the result of a whole circuit.
inline constexpr double PIPELINE_TOLERANCE = 1e-9;

/// Full backend cap: 2^24 amplitudes, 256 MiB.
inline constexpr size_t MAX_QUBITS = 24;
/// Compact backend cap on the first register.
inline constexpr size_t MAX_COMPACT_INPUT_BITS = 26;

/// Dense state of q qubits. Qubit k is bit k of the basis index.
///
/// For a two-register state |x>_n (x) |y>_m the first register occupies the
/// high bits: the basis index is x * 2^m + y, so qubits 0..m-1 belong to the
/// second register and qubits m..m+n-1 to the first.
class StateVector {
   public:
    /// |0...0> on `qubits` qubits.
    explicit StateVector(size_t qubits);
    StateVector(size_t qubits, std::vector<Amplitude> amplitudes);

    size_t qubits() const noexcept {
        return qubits_;
    }
    size_t size() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Amplitude> amplitudes() const noexcept {
        return amplitudes_;
    }
    std::span<Amplitude> amplitudes() noexcept {
        return amplitudes_;
    }
    const Amplitude &operator[](size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const;

   private:
    size_t qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Half-open qubit index range [begin, end).
struct QubitRange {
    size_t begin;
    size_t end;
};

inline QubitRange all_qubits(const StateVector &state) {
    return {0, state.qubits()};
}
/// Qubits of the first (high) register of an (n, m) layout.
inline QubitRange first_register(size_t n, size_t m) {
    return {m, m + n};
}
/// Qubits of the second (low) register of an (n, m) layout.
inline QubitRange second_register(size_t m) {
    return {0, m};
}

/// |first>_n (x) |second>_m.
StateVector basis_state(size_t n, size_t m, const BitString &first, const BitString &second);

void apply_x(StateVector &state, size_t qubit);

/// Hadamard on every qubit of `range`: one normalized butterfly stage per qubit.
void apply_h(StateVector &state, QubitRange range);

/// U_f |x>|y> = |x>|y xor f(x)> on an (f.n(), f.m()) layout. Records one
/// quantum call on f and 2^n simulator evaluations.
void apply_oracle(StateVector &state, const BooleanFunction &f);

/// |gamma_y> = H_m |y>.
StateVector gamma_state(const BitString &y);

struct MeasurementOutcome {
    BitString value;
    double probability;
};

/// Marginal p(x) = sum_y |amp(x, y)|^2 of the first register of an (n, .) layout.
std::vector<double> first_register_probabilities(const StateVector &state, size_t n);

/// Samples the first register using `seed`.
MeasurementOutcome measure_first_register(const StateVector &state, size_t n, uint64_t seed);

/// Returns the unique outcome with probability > 1 - 1e-9; throws
/// NotDeterministic when there is none.
MeasurementOutcome measure_first_register_deterministic(const StateVector &state, size_t n);

/// Draws an index from a probability vector with a seeded uniform variate.
size_t sample_index(std::span<const double> probabilities, uint64_t seed);

/// Index of the entry above 1 - 1e-9, or throws NotDeterministic.
size_t dominant_index(std::span<const double> probabilities);

/// Contracts the second register against <gamma_y|, giving first-register
/// amplitudes of a product state |psi>_n (x) |gamma_y>_m.
std::vector<Amplitude> first_register_amplitudes(const StateVector &state, size_t n, const BitString &y);

/// Compact backend state: (1/sqrt(2^n)) sum_x signs[x] |x>_n (x) |gamma_marker>_m.
struct PhaseVector {
    size_t n;
    std::vector<int8_t> signs;
    BitString marker;
};

/// signs[x] = (-1)^{y . f(x)}; records one quantum call and 2^n simulator
/// evaluations.
PhaseVector compact_gpk_run(const BooleanFunction &f, const BitString &y);

/// First-register amplitudes after H_n, i.e. the Walsh-Hadamard transform of
/// signs / sqrt(2^n). O(n 2^n).
std::vector<double> compact_final_transform(const PhaseVector &phases);

/// Unnormalized in-place Walsh-Hadamard butterflies over all index bits.
template <typename T>
void walsh_hadamard(std::span<T> values) {
    const size_t size = values.size();
    for (size_t half = 1; half < size; half <<= 1) {
        for (size_t block = 0; block < size; block += 2 * half) {
            for (size_t k = block; k < block + half; k++) {
                T a = values[k];
                T b = values[k + half];
                values[k] = a + b;
                values[k + half] = a - b;
            }
        }
    }
}

/// Debug dump: one "index re im" line per amplitude. Not a stable format.
void dump_state(std::ostream &out, const StateVector &state);

}  // namespace gpk

#endif

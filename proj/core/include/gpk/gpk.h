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

#ifndef GPK_GPK_H
#define GPK_GPK_H

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gpk/bitstring.h"
#include "gpk/f2.h"
#include "gpk/oracle.h"
#include "gpk/statevector.h"

namespace gpk {

enum class Backend { Full, Compact };
enum class BackendChoice { Full, Compact, Auto };

std::string backend_name(Backend backend);

/// Auto picks Compact when n + m > 20 and Full otherwise.
Backend resolve_backend(BackendChoice choice, size_t n, size_t m);

/// One execution of the generalized phase kick-back circuit with marker y:
/// prepare |0>_n |y>_m, Hadamard everything, apply U_f once, Hadamard the
/// first register, measure it.
struct GpkRunRecord {
    BitString marker;
    BitString outcome;
    Backend backend;
    uint64_t seed;
    uint64_t quantum_oracle_calls;
    /// The sampled outcome had probability 1 within PIPELINE_TOLERANCE.
    bool deterministic;
    double probability;
    /// Simulator-side probability of outcome 0...0; not observable on hardware
    /// but used for best-effort promise checks.
    double zero_probability;
};

GpkRunRecord gpk_run(const BooleanFunction &f, const BitString &marker, BackendChoice backend, uint64_t seed);

/// Full-backend state after the final first-register Hadamard, (n, m) layout.
StateVector gpk_final_state(const BooleanFunction &f, const BitString &marker);

/// Exact pre-measurement first-register amplitudes:
///   a(z) = 2^-n sum_x (-1)^{f(x).y xor x.z}
/// computed on the compact backend.
std::vector<double> gpk_final_amplitudes(const BooleanFunction &f, const BitString &marker);

enum class DjVerdict { Constant, Balanced };

std::string verdict_name(DjVerdict verdict);

struct DjReport {
    size_t n;
    size_t m;
    DjVerdict verdict;
    /// f1 xor f2; zero when constant.
    BitString lambda;
    /// {f(0)} when constant, {f(0), f(0) xor lambda} when balanced.
    std::vector<BitString> values;
    std::vector<BitString> markers;
    std::vector<GpkRunRecord> runs;
    uint64_t total_quantum_calls;
    uint64_t classical_calls;
    uint64_t seed;
};

/// Generalized constant-vs-balanced solver: one GPK run per marker, then one
/// classical query f(0) to name the values. Markers default to the canonical
/// basis e_0..e_{m-1}; any basis of F2^m is accepted, in which case lambda is
/// solved from {y_i . lambda = [delta_i != 0]}.
DjReport solve_generalized_dj(
    const BooleanFunction &f,
    std::optional<std::vector<BitString>> markers = std::nullopt,
    BackendChoice backend = BackendChoice::Auto,
    uint64_t seed = 0);

/// m = 1 special case: a single GPK run with marker 1.
DjVerdict solve_classic_dj(const BooleanFunction &f, uint64_t seed = 0);

/// m = 1, f(x) = r.x: one GPK run returns r.
BitString solve_bv(const BooleanFunction &f, uint64_t seed = 0);

struct ModifiedBvResult {
    BitString r;
    bool offset;
};

/// m = 1, f(x) = r0 xor r.x: one GPK run for r, then r0 = f(0) classically.
ModifiedBvResult solve_modified_bv(const BooleanFunction &f, uint64_t seed = 0);

struct BvReport {
    size_t n;
    size_t m;
    /// Recovered R (m x n) and r0.
    F2Matrix matrix;
    BitString offset;
    std::vector<BitString> markers;
    /// Row i is the outcome for markers[i], i.e. markers[i]^T R: the matrix of
    /// the linear part in the marker basis. Equal to `matrix` for the
    /// canonical basis.
    F2Matrix marker_basis_matrix;
    /// Inverse of the matrix whose rows are the markers; R = change_of_basis *
    /// marker_basis_matrix.
    F2Matrix change_of_basis;
    std::vector<GpkRunRecord> runs;
    uint64_t total_quantum_calls;
    uint64_t classical_calls;
    uint64_t seed;
};

/// Generalized affine recovery: m GPK runs plus one classical query f(0).
/// Throws NotAffine when a run is not deterministic or, for n <= 10, when an
/// uncounted sweep finds an input the recovered (R, r0) does not reproduce.
BvReport solve_generalized_bv(
    const BooleanFunction &f,
    std::optional<std::vector<BitString>> markers = std::nullopt,
    BackendChoice backend = BackendChoice::Auto,
    uint64_t seed = 0);

struct DropBitReport {
    size_t n;
    size_t dropped;
    std::vector<GpkRunRecord> runs;
    uint64_t total_quantum_calls;
    uint64_t seed;
};

/// Runs GPK(e_i) for i = 0..n-2 on f: {0,1}^n -> {0,1}^(n-1). Each outcome is
/// the unit vector of the input bit feeding output i; the missing unit vector
/// names the dropped bit. Throws NotABitDrop otherwise.
DropBitReport detect_dropped_bit_report(
    const BooleanFunction &f, BackendChoice backend = BackendChoice::Auto, uint64_t seed = 0);
size_t detect_dropped_bit(const BooleanFunction &f, uint64_t seed = 0);

/// True iff GPK(y) on f and on f xor s have the same outcome distribution
/// (within PIPELINE_TOLERANCE at every index) and every seed in `seeds` samples
/// the same outcome for both.
bool translation_invariance_check(
    const BooleanFunction &f, const BitString &s, const BitString &marker, std::span<const uint64_t> seeds);

}  // namespace gpk

#endif

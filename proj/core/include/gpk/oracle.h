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

#ifndef GPK_ORACLE_H
#define GPK_ORACLE_H

#include <atomic>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "gpk/bitstring.h"
#include "gpk/f2.h"

namespace gpk {

/// Largest input width for which a full table (2^n entries) is materialized.
constexpr size_t MAX_TABLE_INPUT_BITS = 20;

/// Outputs indexed by input integer, each packed in the low m bits.
struct TruthTableRepr {
    std::vector<uint32_t> outputs;
};

/// f(x) = offset xor matrix . x
struct AffineRepr {
    F2Matrix matrix;
    BitString offset;
};

/// Deletes input bit `dropped`; bits above it shift down by one.
struct BitDropRepr {
    size_t dropped;
};

using Representation = std::variant<TruthTableRepr, AffineRepr, BitDropRepr>;

/// Relaxed atomic counter that copies by value, so functions holding one stay
/// regular types.
class CallCounter {
   public:
    CallCounter() = default;
    CallCounter(const CallCounter &other) : count_(other.get()) {
    }
    CallCounter &operator=(const CallCounter &other) {
        count_.store(other.get(), std::memory_order_relaxed);
        return *this;
    }

    uint64_t get() const noexcept {
        return count_.load(std::memory_order_relaxed);
    }
    void add(uint64_t k = 1) noexcept {
        count_.fetch_add(k, std::memory_order_relaxed);
    }
    void reset() noexcept {
        count_.store(0, std::memory_order_relaxed);
    }

   private:
    std::atomic<uint64_t> count_{0};
};

/// A Boolean function f: {0,1}^n -> {0,1}^m together with query accounting.
///
/// Three counters are kept apart:
///   - classical_calls: evaluate() invocations, the classical query cost;
///   - quantum_calls: applications of the U_f gate by a simulator;
///   - simulator_evaluations: table lookups a simulator performs to realize
///     U_f. These are simulator work, not queries.
/// Introspection (classify_promise, tabulate, verification sweeps) goes through
/// peek() and touches no counter.
class BooleanFunction {
   public:
    static BooleanFunction truth_table(size_t n, size_t m, std::vector<uint32_t> outputs);
    static BooleanFunction truth_table(size_t n, size_t m, const std::vector<BitString> &outputs);
    static BooleanFunction affine(F2Matrix matrix, BitString offset);
    static BooleanFunction bit_drop(size_t n, size_t dropped);

    size_t n() const noexcept {
        return n_;
    }
    size_t m() const noexcept {
        return m_;
    }
    const Representation &representation() const noexcept {
        return repr_;
    }
    std::string kind_name() const;

    /// Classical query: f(x), counted.
    BitString evaluate(const BitString &x) const;

    /// Uncounted f(x) on packed words. x must be below 2^n.
    uint32_t peek(uint32_t x) const noexcept;
    BitString peek(const BitString &x) const;

    /// All 2^n outputs, uncounted. n must be at most MAX_TABLE_INPUT_BITS.
    std::vector<uint32_t> tabulate() const;
    BooleanFunction to_truth_table() const;

    uint64_t classical_calls() const noexcept {
        return classical_calls_.get();
    }
    uint64_t quantum_calls() const noexcept {
        return quantum_calls_.get();
    }
    uint64_t simulator_evaluations() const noexcept {
        return simulator_evaluations_.get();
    }
    void record_quantum_call() const noexcept {
        quantum_calls_.add();
    }
    void record_simulator_evaluations(uint64_t k) const noexcept {
        simulator_evaluations_.add(k);
    }
    void reset_counters() const noexcept;

   private:
    BooleanFunction(size_t n, size_t m, Representation repr);

    size_t n_;
    size_t m_;
    Representation repr_;
    mutable CallCounter classical_calls_;
    mutable CallCounter quantum_calls_;
    mutable CallCounter simulator_evaluations_;
};

/// f(x) xor s for every x. Stays affine when f is affine.
BooleanFunction translate(const BooleanFunction &f, const BitString &s);

enum class PromiseKind { Constant, Balanced, Neither };

std::string promise_kind_name(PromiseKind kind);

/// Constant carries its value in `first`; Balanced carries the two values with
/// first < second as integers.
struct PromiseClass {
    PromiseKind kind = PromiseKind::Neither;
    BitString first;
    BitString second;

    static PromiseClass constant(const BitString &value);
    static PromiseClass balanced(const BitString &a, const BitString &b);
    static PromiseClass neither();

    bool operator==(const PromiseClass &other) const = default;
};

/// Exhaustive, uncounted scan over all 2^n inputs (n <= 20).
PromiseClass classify_promise(const BooleanFunction &f);

/// Seeded constant or balanced truth table. Balanced picks f1 != f2 uniformly
/// and assigns f1 to a uniformly random half of the inputs.
BooleanFunction random_promise_instance(size_t n, size_t m, PromiseKind kind, uint64_t seed);

/// Seeded uniformly random (R, r0), stored as AffineRepr.
BooleanFunction random_affine_instance(size_t n, size_t m, uint64_t seed);

/// Balanced table whose first half of inputs (0 .. 2^(n-1)-1) is the value
/// `low` and second half `high`; the worst case for scanning in input order.
BooleanFunction adversarial_balanced_instance(size_t n, const BitString &low, const BitString &high);

/// Deterministic classical solver for the constant-or-balanced promise. Queries
/// inputs 0, 1, 2, ... and stops at the first value differing from f(0), or
/// after 2^(n-1)+1 agreeing values.
PromiseClass classical_dj_solver(const BooleanFunction &f);

struct ClassicalAffineFit {
    F2Matrix matrix;
    BitString offset;
};

/// Recovers (R, r0) with exactly n+1 queries: r0 = f(0) and column j of R is
/// f(e_j) xor r0. For n <= 12 an uncounted sweep checks the fit and throws
/// NotAffine on any mismatch.
ClassicalAffineFit classical_bv_solver(const BooleanFunction &f);

/// Uncounted check that (matrix, offset) reproduces f on every input.
bool affine_fit_matches(const BooleanFunction &f, const F2Matrix &matrix, const BitString &offset);

}  // namespace gpk

#endif

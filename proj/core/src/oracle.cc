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

#include "gpk/oracle.h"

#include <algorithm>

#include "gpk/errors.h"
#include "gpk/rng.h"

namespace gpk {

namespace {

void check_widths(size_t n, size_t m) {
    if (n > BitString::MAX_LEN || m > BitString::MAX_LEN) {
        throw GpkError(ErrorCode::TooLarge, "function widths are limited to 30 bits");
    }
    if (m == 0) {
        throw GpkError(ErrorCode::WrongShape, "output width must be at least 1");
    }
}

void check_table_size(size_t n) {
    if (n > MAX_TABLE_INPUT_BITS) {
        throw GpkError(
            ErrorCode::TooLarge,
            "exhaustive tables are limited to n <= " + std::to_string(MAX_TABLE_INPUT_BITS) + ", got n = " +
                std::to_string(n));
    }
}

uint32_t low_mask(size_t bits) {
    return bits >= 32 ? ~uint32_t{0} : (uint32_t{1} << bits) - 1;
}

}  // namespace

BooleanFunction::BooleanFunction(size_t n, size_t m, Representation repr) : n_(n), m_(m), repr_(std::move(repr)) {
}

BooleanFunction BooleanFunction::truth_table(size_t n, size_t m, std::vector<uint32_t> outputs) {
    check_widths(n, m);
    check_table_size(n);
    if (outputs.size() != (size_t{1} << n)) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "truth table for n = " + std::to_string(n) + " needs " + std::to_string(size_t{1} << n) + " entries, got " +
                std::to_string(outputs.size()));
    }
    uint32_t mask = low_mask(m);
    for (uint32_t v : outputs) {
        if ((v & ~mask) != 0) {
            throw GpkError(ErrorCode::LengthMismatch, "truth table entry wider than m = " + std::to_string(m));
        }
    }
    return BooleanFunction(n, m, TruthTableRepr{std::move(outputs)});
}

BooleanFunction BooleanFunction::truth_table(size_t n, size_t m, const std::vector<BitString> &outputs) {
    std::vector<uint32_t> packed;
    packed.reserve(outputs.size());
    for (const auto &v : outputs) {
        if (v.len() != m) {
            throw GpkError(ErrorCode::LengthMismatch, "truth table entry '" + v.str() + "' does not have length m");
        }
        packed.push_back(v.value());
    }
    return truth_table(n, m, std::move(packed));
}

BooleanFunction BooleanFunction::affine(F2Matrix matrix, BitString offset) {
    size_t n = matrix.cols();
    size_t m = matrix.rows();
    check_widths(n, m);
    if (offset.len() != m) {
        throw GpkError(ErrorCode::LengthMismatch, "affine offset length must equal the matrix row count");
    }
    return BooleanFunction(n, m, AffineRepr{std::move(matrix), offset});
}

BooleanFunction BooleanFunction::bit_drop(size_t n, size_t dropped) {
    if (n < 2) {
        throw GpkError(ErrorCode::WrongShape, "a bit-dropping function needs n >= 2");
    }
    check_widths(n, n - 1);
    if (dropped >= n) {
        throw GpkError(ErrorCode::BadIndex, "dropped bit " + std::to_string(dropped) + " out of range");
    }
    return BooleanFunction(n, n - 1, BitDropRepr{dropped});
}

std::string BooleanFunction::kind_name() const {
    struct {
        std::string operator()(const TruthTableRepr &) const {
            return "table";
        }
        std::string operator()(const AffineRepr &) const {
            return "affine";
        }
        std::string operator()(const BitDropRepr &r) const {
            return "bitdrop:" + std::to_string(r.dropped);
        }
    } visitor;
    return std::visit(visitor, repr_);
}

uint32_t BooleanFunction::peek(uint32_t x) const noexcept {
    if (const auto *table = std::get_if<TruthTableRepr>(&repr_)) {
        return table->outputs[x];
    }
    if (const auto *aff = std::get_if<AffineRepr>(&repr_)) {
        uint32_t out = aff->offset.value();
        for (size_t i = 0; i < m_; i++) {
            out ^= static_cast<uint32_t>(dot_words(aff->matrix.row(i).value(), x)) << i;
        }
        return out;
    }
    const auto &drop = std::get<BitDropRepr>(repr_);
    uint32_t below = x & low_mask(drop.dropped);
    uint32_t above = (x >> (drop.dropped + 1)) << drop.dropped;
    return below | above;
}

BitString BooleanFunction::peek(const BitString &x) const {
    if (x.len() != n_) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "input has length " + std::to_string(x.len()) + " but f expects " + std::to_string(n_));
    }
    return BitString(m_, peek(x.value()));
}

BitString BooleanFunction::evaluate(const BitString &x) const {
    BitString out = peek(x);
    classical_calls_.add();
    return out;
}

std::vector<uint32_t> BooleanFunction::tabulate() const {
    check_table_size(n_);
    if (const auto *table = std::get_if<TruthTableRepr>(&repr_)) {
        return table->outputs;
    }
    std::vector<uint32_t> out(size_t{1} << n_);
    for (size_t x = 0; x < out.size(); x++) {
        out[x] = peek(static_cast<uint32_t>(x));
    }
    return out;
}

BooleanFunction BooleanFunction::to_truth_table() const {
    return truth_table(n_, m_, tabulate());
}

void BooleanFunction::reset_counters() const noexcept {
    classical_calls_.reset();
    quantum_calls_.reset();
    simulator_evaluations_.reset();
}

BooleanFunction translate(const BooleanFunction &f, const BitString &s) {
    if (s.len() != f.m()) {
        throw GpkError(ErrorCode::LengthMismatch, "translation string must have length m");
    }
    if (const auto *aff = std::get_if<AffineRepr>(&f.representation())) {
        return BooleanFunction::affine(aff->matrix, aff->offset ^ s);
    }
    auto table = f.tabulate();
    for (auto &v : table) {
        v ^= s.value();
    }
    return BooleanFunction::truth_table(f.n(), f.m(), std::move(table));
}

std::string promise_kind_name(PromiseKind kind) {
    switch (kind) {
        case PromiseKind::Constant:
            return "Constant";
        case PromiseKind::Balanced:
            return "Balanced";
        case PromiseKind::Neither:
            return "Neither";
    }
    return "Unknown";
}

PromiseClass PromiseClass::constant(const BitString &value) {
    return {PromiseKind::Constant, value, BitString()};
}

PromiseClass PromiseClass::balanced(const BitString &a, const BitString &b) {
    if (a.len() != b.len() || a == b) {
        throw GpkError(ErrorCode::PromiseViolated, "a balanced function needs two distinct values of equal length");
    }
    return a.value() < b.value() ? PromiseClass{PromiseKind::Balanced, a, b} : PromiseClass{PromiseKind::Balanced, b, a};
}

PromiseClass PromiseClass::neither() {
    return {};
}

PromiseClass classify_promise(const BooleanFunction &f) {
    check_table_size(f.n());
    const uint32_t size = uint32_t{1} << f.n();
    const uint32_t first = f.peek(uint32_t{0});
    uint32_t second = 0;
    uint64_t first_count = 0;
    uint64_t second_count = 0;
    for (uint32_t x = 0; x < size; x++) {
        uint32_t v = f.peek(x);
        if (v == first) {
            first_count++;
        } else if (second_count == 0 || v == second) {
            second = v;
            second_count++;
        } else {
            return PromiseClass::neither();
        }
    }
    if (second_count == 0) {
        return PromiseClass::constant(BitString(f.m(), first));
    }
    if (first_count == second_count) {
        return PromiseClass::balanced(BitString(f.m(), first), BitString(f.m(), second));
    }
    return PromiseClass::neither();
}

BooleanFunction random_promise_instance(size_t n, size_t m, PromiseKind kind, uint64_t seed) {
    check_widths(n, m);
    check_table_size(n);
    SplitMix64 rng(seed);
    const size_t size = size_t{1} << n;
    switch (kind) {
        case PromiseKind::Constant: {
            auto value = static_cast<uint32_t>(rng.bits(static_cast<unsigned>(m)));
            return BooleanFunction::truth_table(n, m, std::vector<uint32_t>(size, value));
        }
        case PromiseKind::Balanced: {
            if (n == 0) {
                throw GpkError(ErrorCode::WrongShape, "a balanced function needs n >= 1");
            }
            auto f1 = static_cast<uint32_t>(rng.bits(static_cast<unsigned>(m)));
            uint32_t f2 = f1;
            while (f2 == f1) {
                f2 = static_cast<uint32_t>(rng.bits(static_cast<unsigned>(m)));
            }
            std::vector<uint32_t> outputs(size, f2);
            std::vector<uint32_t> order(size);
            for (size_t x = 0; x < size; x++) {
                order[x] = static_cast<uint32_t>(x);
            }
            rng.shuffle(order);
            for (size_t k = 0; k < size / 2; k++) {
                outputs[order[k]] = f1;
            }
            return BooleanFunction::truth_table(n, m, std::move(outputs));
        }
        case PromiseKind::Neither:
            break;
    }
    throw GpkError(ErrorCode::WrongShape, "random instances are either constant or balanced");
}

BooleanFunction random_affine_instance(size_t n, size_t m, uint64_t seed) {
    check_widths(n, m);
    SplitMix64 rng(seed);
    std::vector<BitString> rows;
    rows.reserve(m);
    for (size_t i = 0; i < m; i++) {
        rows.emplace_back(n, static_cast<uint32_t>(rng.bits(static_cast<unsigned>(n))));
    }
    BitString offset(m, static_cast<uint32_t>(rng.bits(static_cast<unsigned>(m))));
    return BooleanFunction::affine(F2Matrix(n, std::move(rows)), offset);
}

BooleanFunction adversarial_balanced_instance(size_t n, const BitString &low, const BitString &high) {
    if (n == 0) {
        throw GpkError(ErrorCode::WrongShape, "a balanced function needs n >= 1");
    }
    if (low.len() != high.len() || low == high) {
        throw GpkError(ErrorCode::PromiseViolated, "the two values must be distinct strings of equal length");
    }
    check_widths(n, low.len());
    check_table_size(n);
    const size_t half = size_t{1} << (n - 1);
    std::vector<uint32_t> outputs(2 * half, high.value());
    std::fill(outputs.begin(), outputs.begin() + static_cast<std::ptrdiff_t>(half), low.value());
    return BooleanFunction::truth_table(n, low.len(), std::move(outputs));
}

PromiseClass classical_dj_solver(const BooleanFunction &f) {
    const size_t n = f.n();
    // With n = 0 there is a single input and the function is constant.
    const uint64_t needed = n == 0 ? 1 : (uint64_t{1} << (n - 1)) + 1;
    const BitString first = f.evaluate(BitString::zero(n));
    for (uint64_t x = 1; x < needed; x++) {
        BitString v = f.evaluate(BitString(n, static_cast<uint32_t>(x)));
        if (v != first) {
            return PromiseClass::balanced(first, v);
        }
    }
    return PromiseClass::constant(first);
}

bool affine_fit_matches(const BooleanFunction &f, const F2Matrix &matrix, const BitString &offset) {
    if (matrix.rows() != f.m() || matrix.cols() != f.n() || offset.len() != f.m()) {
        return false;
    }
    auto fit = BooleanFunction::affine(matrix, offset);
    const uint64_t size = uint64_t{1} << f.n();
    for (uint64_t x = 0; x < size; x++) {
        if (fit.peek(static_cast<uint32_t>(x)) != f.peek(static_cast<uint32_t>(x))) {
            return false;
        }
    }
    return true;
}

ClassicalAffineFit classical_bv_solver(const BooleanFunction &f) {
    const size_t n = f.n();
    const size_t m = f.m();
    BitString offset = f.evaluate(BitString::zero(n));
    F2Matrix matrix(m, n);
    for (size_t j = 0; j < n; j++) {
        BitString col = f.evaluate(BitString::unit(n, j)) ^ offset;
        for (size_t i = 0; i < m; i++) {
            if (col[i]) {
                matrix.set(i, j, true);
            }
        }
    }
    if (n <= 12 && !affine_fit_matches(f, matrix, offset)) {
        throw GpkError(ErrorCode::NotAffine, "f is not reproduced by r0 xor R.x on every input");
    }
    return {std::move(matrix), offset};
}

}  // namespace gpk

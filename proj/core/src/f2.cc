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

#include "gpk/f2.h"

#include <algorithm>

#include "gpk/errors.h"

namespace gpk {

static void check_dim(size_t value, const char *what) {
    if (value > BitString::MAX_LEN) {
        throw GpkError(ErrorCode::TooLarge, std::string(what) + " exceeds 30: " + std::to_string(value));
    }
}

F2Matrix::F2Matrix(size_t rows, size_t cols) : cols_(cols) {
    check_dim(rows, "matrix row count");
    check_dim(cols, "matrix column count");
    rows_.assign(rows, BitString::zero(cols));
}

F2Matrix::F2Matrix(std::vector<BitString> rows) : cols_(rows.empty() ? 0 : rows.front().len()), rows_(std::move(rows)) {
    validate();
}

F2Matrix::F2Matrix(size_t cols, std::vector<BitString> rows) : cols_(cols), rows_(std::move(rows)) {
    validate();
}

void F2Matrix::validate() const {
    check_dim(rows_.size(), "matrix row count");
    check_dim(cols_, "matrix column count");
    for (const auto &r : rows_) {
        if (r.len() != cols_) {
            throw GpkError(ErrorCode::LengthMismatch, "matrix rows must all have length " + std::to_string(cols_));
        }
    }
}

F2Matrix F2Matrix::identity(size_t size) {
    F2Matrix result(size, size);
    for (size_t i = 0; i < size; i++) {
        result.rows_[i] = BitString::unit(size, i);
    }
    return result;
}

void F2Matrix::set(size_t i, size_t j, bool bit) {
    rows_.at(i) = rows_.at(i).with_bit(j, bit);
}

void F2Matrix::set_row(size_t i, const BitString &row) {
    if (row.len() != cols_) {
        throw GpkError(ErrorCode::LengthMismatch, "row length does not match column count");
    }
    rows_.at(i) = row;
}

BitString F2Matrix::column(size_t j) const {
    if (j >= cols_) {
        throw GpkError(ErrorCode::BadIndex, "column " + std::to_string(j) + " out of range");
    }
    uint32_t value = 0;
    for (size_t i = 0; i < rows_.size(); i++) {
        value |= static_cast<uint32_t>(rows_[i][j]) << i;
    }
    return BitString(rows_.size(), value);
}

F2Matrix F2Matrix::transpose() const {
    std::vector<BitString> cols;
    cols.reserve(cols_);
    for (size_t j = 0; j < cols_; j++) {
        cols.push_back(column(j));
    }
    return F2Matrix(rows_.size(), std::move(cols));
}

BitString mat_vec(const F2Matrix &matrix, const BitString &x) {
    if (matrix.cols() != x.len()) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "matrix has " + std::to_string(matrix.cols()) + " columns but vector has length " + std::to_string(x.len()));
    }
    uint32_t value = 0;
    for (size_t i = 0; i < matrix.rows(); i++) {
        value |= static_cast<uint32_t>(dot_words(matrix.row(i).value(), x.value())) << i;
    }
    return BitString(matrix.rows(), value);
}

BitString row_combination(const F2Matrix &matrix, const BitString &y) {
    if (matrix.rows() != y.len()) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "matrix has " + std::to_string(matrix.rows()) + " rows but vector has length " + std::to_string(y.len()));
    }
    uint32_t value = 0;
    for (size_t i = 0; i < matrix.rows(); i++) {
        if (y[i]) {
            value ^= matrix.row(i).value();
        }
    }
    return BitString(matrix.cols(), value);
}

F2Matrix mat_mul(const F2Matrix &a, const F2Matrix &b) {
    if (a.cols() != b.rows()) {
        throw GpkError(ErrorCode::LengthMismatch, "matrix product dimensions do not agree");
    }
    std::vector<BitString> rows;
    rows.reserve(a.rows());
    for (size_t i = 0; i < a.rows(); i++) {
        rows.push_back(row_combination(b, a.row(i)));
    }
    return F2Matrix(b.cols(), std::move(rows));
}

namespace {

// Row-reduces `rows` in place over the low `width` bits. Returns the pivot
// column chosen for each reduced row (in order); rows past the returned size
// are zero in those bits.
std::vector<size_t> reduce(std::vector<uint64_t> &rows, size_t width) {
    std::vector<size_t> pivots;
    size_t next = 0;
    for (size_t col = 0; col < width && next < rows.size(); col++) {
        uint64_t mask = uint64_t{1} << col;
        auto it = std::find_if(rows.begin() + next, rows.end(), [&](uint64_t r) { return (r & mask) != 0; });
        if (it == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + next, it);
        for (size_t k = 0; k < rows.size(); k++) {
            if (k != next && (rows[k] & mask)) {
                rows[k] ^= rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    return pivots;
}

}  // namespace

size_t rank(std::span<const BitString> vectors) {
    if (vectors.empty()) {
        return 0;
    }
    size_t width = vectors.front().len();
    std::vector<uint64_t> rows;
    rows.reserve(vectors.size());
    for (const auto &v : vectors) {
        if (v.len() != width) {
            throw GpkError(ErrorCode::LengthMismatch, "rank of strings with differing lengths");
        }
        rows.push_back(v.value());
    }
    return reduce(rows, width).size();
}

bool is_basis(std::span<const BitString> vectors, size_t m) {
    for (const auto &v : vectors) {
        if (v.len() != m) {
            throw GpkError(
                ErrorCode::LengthMismatch,
                "basis candidate '" + v.str() + "' does not have length " + std::to_string(m));
        }
    }
    return vectors.size() == m && rank(vectors) == m;
}

F2LinearSystem::F2LinearSystem(size_t unknown_len) : unknown_len_(unknown_len) {
    check_dim(unknown_len, "unknown count");
}

void F2LinearSystem::add(const BitString &coefficients, bool rhs) {
    if (coefficients.len() != unknown_len_) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            "equation has " + std::to_string(coefficients.len()) + " coefficients, expected " +
                std::to_string(unknown_len_));
    }
    equations_.push_back({coefficients, rhs});
}

SolveResult solve_f2(const F2LinearSystem &system) {
    const size_t width = system.unknown_len();
    // Augmented rows: coefficient bits low, rhs at bit `width`.
    std::vector<uint64_t> rows;
    rows.reserve(system.equations().size());
    for (const auto &eq : system.equations()) {
        rows.push_back(uint64_t{eq.coefficients.value()} | (uint64_t{eq.rhs} << width));
    }
    auto pivots = reduce(rows, width);
    const uint64_t rhs_bit = uint64_t{1} << width;

    for (size_t k = pivots.size(); k < rows.size(); k++) {
        if (rows[k] == rhs_bit) {
            return {SolveStatus::NoSolution, BitString::zero(width), pivots.size()};
        }
    }
    uint32_t solution = 0;
    for (size_t k = 0; k < pivots.size(); k++) {
        if (rows[k] & rhs_bit) {
            solution |= uint32_t{1} << pivots[k];
        }
    }
    auto status = pivots.size() == width ? SolveStatus::Unique : SolveStatus::Underdetermined;
    return {status, BitString(width, solution), pivots.size()};
}

F2Matrix inverse(const F2Matrix &matrix) {
    const size_t n = matrix.rows();
    if (matrix.cols() != n) {
        throw GpkError(ErrorCode::LengthMismatch, "only square matrices can be inverted");
    }
    // [A | I] packed as A in the low n bits and I in the next n bits.
    std::vector<uint64_t> rows(n);
    for (size_t i = 0; i < n; i++) {
        rows[i] = uint64_t{matrix.row(i).value()} | (uint64_t{1} << (n + i));
    }
    if (reduce(rows, n).size() != n) {
        throw GpkError(ErrorCode::NotABasis, "matrix is singular over F2");
    }
    std::vector<BitString> inv;
    inv.reserve(n);
    for (size_t i = 0; i < n; i++) {
        inv.push_back(BitString(n, static_cast<uint32_t>(rows[i] >> n)));
    }
    return F2Matrix(n, std::move(inv));
}

std::string solve_status_name(SolveStatus status) {
    switch (status) {
        case SolveStatus::Unique:
            return "Unique";
        case SolveStatus::Underdetermined:
            return "Underdetermined";
        case SolveStatus::NoSolution:
            return "NoSolution";
    }
    return "Unknown";
}

}  // namespace gpk

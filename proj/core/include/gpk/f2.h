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

#ifndef GPK_F2_H
#define GPK_F2_H

#include <span>
#include <string>
#include <vector>

#include "gpk/bitstring.h"

namespace gpk {

/// An m x n Boolean matrix stored as m row strings of length n.
class F2Matrix {
   public:
    F2Matrix(size_t rows, size_t cols);
    explicit F2Matrix(std::vector<BitString> rows);
    /// Explicit column count, so an empty row list is representable.
    F2Matrix(size_t cols, std::vector<BitString> rows);

    static F2Matrix identity(size_t size);

    size_t rows() const noexcept {
        return rows_.size();
    }
    size_t cols() const noexcept {
        return cols_;
    }
    const BitString &row(size_t i) const {
        return rows_.at(i);
    }
    std::span<const BitString> row_data() const noexcept {
        return rows_;
    }
    bool at(size_t i, size_t j) const {
        return rows_.at(i).get(j);
    }
    void set(size_t i, size_t j, bool bit);
    void set_row(size_t i, const BitString &row);

    /// Column j as a string of length rows().
    BitString column(size_t j) const;
    F2Matrix transpose() const;

    bool operator==(const F2Matrix &other) const = default;

   private:
    void validate() const;

    size_t cols_;
    std::vector<BitString> rows_;
};

/// (R.x)_i = r_i . x
BitString mat_vec(const F2Matrix &matrix, const BitString &x);

/// y^T R: the xor of the rows r_i with y_i = 1. Result has length cols().
BitString row_combination(const F2Matrix &matrix, const BitString &y);

/// Product over F2; requires a.cols() == b.rows().
F2Matrix mat_mul(const F2Matrix &a, const F2Matrix &b);

size_t rank(std::span<const BitString> vectors);

/// True iff `vectors` holds exactly m linearly independent strings of length m.
bool is_basis(std::span<const BitString> vectors, size_t m);

struct F2Equation {
    BitString coefficients;
    bool rhs;
};

/// A system {c_k . unknown = rhs_k} in `unknown_len` unknowns.
class F2LinearSystem {
   public:
    explicit F2LinearSystem(size_t unknown_len);

    void add(const BitString &coefficients, bool rhs);

    size_t unknown_len() const noexcept {
        return unknown_len_;
    }
    std::span<const F2Equation> equations() const noexcept {
        return equations_;
    }
    bool empty() const noexcept {
        return equations_.empty();
    }

   private:
    size_t unknown_len_;
    std::vector<F2Equation> equations_;
};

enum class SolveStatus { Unique, Underdetermined, NoSolution };

struct SolveResult {
    SolveStatus status;
    /// The unique solution when status == Unique; otherwise one particular
    /// solution (free variables set to zero) for Underdetermined and zero
    /// for NoSolution.
    BitString solution;
    size_t rank;
};

/// Gauss-Jordan elimination. Pivots are chosen as the first remaining row (in
/// insertion order) with a 1 in the pivot column, so results do not depend on
/// the platform.
SolveResult solve_f2(const F2LinearSystem &system);

/// Inverse of a square matrix; throws NotABasis when singular.
F2Matrix inverse(const F2Matrix &matrix);

std::string solve_status_name(SolveStatus status);

}  // namespace gpk

#endif

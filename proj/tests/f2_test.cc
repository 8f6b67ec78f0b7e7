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

#include <random>

#include "gtest/gtest.h"

#include "gpk/errors.h"
#include "reference.h"

using namespace gpk;

static BitString bs(const char *text) {
    return BitString::parse(text);
}

static ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const GpkError &e) {
        return e.code();
    }
    ADD_FAILURE() << "expected a GpkError";
    return ErrorCode::ParseError;
}

TEST(bitstring, display_order_puts_highest_index_left) {
    auto b = bs("010");
    EXPECT_EQ(b.len(), 3u);
    EXPECT_FALSE(b[0]);
    EXPECT_TRUE(b[1]);
    EXPECT_FALSE(b[2]);
    EXPECT_EQ(b.value(), 2u);
    EXPECT_EQ(BitString::unit(3, 0).str(), "001");
    EXPECT_EQ(BitString::unit(5, 4).str(), "10000");
    EXPECT_EQ(BitString(4, 0b1011).str(), "1011");
}

TEST(bitstring, rejects_bad_input) {
    EXPECT_EQ(code_of([] { bs("01x"); }), ErrorCode::ParseError);
    EXPECT_EQ(code_of([] { BitString(31, 0); }), ErrorCode::TooLarge);
    EXPECT_EQ(code_of([] { BitString(2, 4); }), ErrorCode::LengthMismatch);
    EXPECT_EQ(code_of([] { bs("01").get(2); }), ErrorCode::BadIndex);
    EXPECT_EQ(code_of([] { BitString::unit(3, 3); }), ErrorCode::BadIndex);
}

TEST(bitstring, parse_str_round_trip_all_short_strings) {
    for (size_t len = 0; len <= 8; len++) {
        for (uint32_t v = 0; v < (uint32_t{1} << len); v++) {
            BitString b(len, v);
            EXPECT_EQ(BitString::parse(b.str()), b);
        }
    }
}

TEST(xor, examples) {
    EXPECT_EQ(bs("010") ^ bs("011"), bs("001"));
    EXPECT_EQ(bs("10110") ^ bs("10110"), BitString::zero(5));
    EXPECT_EQ(bs("10110") ^ BitString::zero(5), bs("10110"));
    EXPECT_EQ(code_of([] { xor_bits(bs("01"), bs("011")); }), ErrorCode::LengthMismatch);
}

TEST(xor, group_laws_exhaustive_len_6) {
    const size_t len = 6;
    for (uint32_t a = 0; a < 64; a++) {
        for (uint32_t b = 0; b < 64; b++) {
            BitString x(len, a), y(len, b);
            ASSERT_EQ(x ^ y, y ^ x);
            ASSERT_EQ((x ^ y) ^ y, x);
            for (uint32_t c = 0; c < 64; c += 7) {
                BitString z(len, c);
                ASSERT_EQ((x ^ y) ^ z, x ^ (y ^ z));
            }
        }
    }
}

TEST(xor, group_laws_random_long) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 2000; trial++) {
        size_t len = 7 + rng() % 24;
        auto draw = [&] { return BitString(len, static_cast<uint32_t>(rng() & ((uint64_t{1} << len) - 1))); };
        auto x = draw(), y = draw(), z = draw();
        ASSERT_EQ(x ^ y, y ^ x);
        ASSERT_EQ((x ^ y) ^ z, x ^ (y ^ z));
        ASSERT_EQ(x ^ x, BitString::zero(len));
    }
}

TEST(dot, examples) {
    EXPECT_TRUE(dot(bs("010"), bs("011")));
    EXPECT_FALSE(dot(bs("11011"), BitString::zero(5)));
    EXPECT_EQ(code_of([] { dot(bs("01"), bs("011")); }), ErrorCode::LengthMismatch);
}

TEST(dot, distributes_over_xor_exhaustive_len_6) {
    const size_t len = 6;
    for (uint32_t a = 0; a < 64; a++) {
        for (uint32_t b = 0; b < 64; b++) {
            for (uint32_t c = 0; c < 64; c++) {
                BitString x(len, a), y(len, b), z(len, c);
                ASSERT_EQ(dot(x, y ^ z), dot(x, y) ^ dot(x, z));
            }
        }
    }
}

TEST(dot, distributes_over_xor_exhaustive_len_8_and_matches_reference) {
    const size_t len = 8;
    for (uint32_t a = 0; a < 256; a += 3) {
        for (uint32_t b = 0; b < 256; b++) {
            BitString x(len, a), y(len, b);
            ASSERT_EQ(dot(x, y), reference::dot(x, y));
            for (uint32_t c = 0; c < 256; c += 17) {
                BitString z(len, c);
                ASSERT_EQ(dot(x, y ^ z), dot(x, y) ^ dot(x, z));
            }
        }
    }
}

TEST(mat_vec, identity_and_zero) {
    EXPECT_EQ(mat_vec(F2Matrix::identity(3), bs("101")), bs("101"));
    EXPECT_EQ(mat_vec(F2Matrix(4, 3), bs("111")), BitString::zero(4));
}

TEST(mat_vec, two_by_three_example) {
    // Rows [1,1,0] and [0,1,1] in column order are the strings 011 and 110.
    F2Matrix r({bs("011"), bs("110")});
    auto x = bs("111");
    // Independent evaluation: each row has two ones against x = 111.
    BitString expected(2, 0);
    for (size_t i = 0; i < 2; i++) {
        expected = expected.with_bit(i, reference::dot(r.row(i), x));
    }
    EXPECT_EQ(expected, bs("00"));
    EXPECT_EQ(mat_vec(r, x), expected);
    EXPECT_EQ(mat_vec(r, bs("001")), bs("01"));
    EXPECT_EQ(code_of([&] { mat_vec(r, bs("11")); }), ErrorCode::LengthMismatch);
}

TEST(mat_vec, linear_exhaustive_len_5) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; trial++) {
        size_t rows = 1 + rng() % 5;
        std::vector<BitString> data;
        for (size_t i = 0; i < rows; i++) {
            data.emplace_back(5, static_cast<uint32_t>(rng() & 31));
        }
        F2Matrix r(data);
        for (uint32_t a = 0; a < 32; a++) {
            for (uint32_t b = 0; b < 32; b++) {
                BitString x(5, a), y(5, b);
                ASSERT_EQ(mat_vec(r, x ^ y), mat_vec(r, x) ^ mat_vec(r, y));
            }
        }
    }
}

TEST(matrix, transpose_inverse_and_row_combination) {
    F2Matrix a({bs("011"), bs("110"), bs("001")});
    EXPECT_EQ(a.transpose().transpose(), a);
    EXPECT_EQ(a.column(0), bs("101"));
    EXPECT_EQ(row_combination(a, bs("011")), bs("101"));
    auto inv = inverse(a);
    EXPECT_EQ(mat_mul(a, inv), F2Matrix::identity(3));
    EXPECT_EQ(mat_mul(inv, a), F2Matrix::identity(3));
    F2Matrix singular({bs("110"), bs("011"), bs("101")});
    EXPECT_EQ(code_of([&] { inverse(singular); }), ErrorCode::NotABasis);
}

TEST(solve_f2, canonical_system_reads_off_solution) {
    auto lambda = bs("1011");
    F2LinearSystem system(4);
    for (size_t i = 0; i < 4; i++) {
        system.add(BitString::unit(4, i), lambda[i]);
    }
    auto result = solve_f2(system);
    EXPECT_EQ(result.status, SolveStatus::Unique);
    EXPECT_EQ(result.solution, lambda);
}

TEST(solve_f2, two_by_two_example_matches_enumeration) {
    // {11 . l = 1, 01 . l = 0}
    auto candidates = reference::enumerate_solutions({{0b11, true}, {0b01, false}}, 2);
    ASSERT_EQ(candidates.size(), 1u);
    EXPECT_EQ(BitString(2, candidates[0]), bs("10"));

    F2LinearSystem system(2);
    system.add(bs("11"), true);
    system.add(bs("01"), false);
    auto result = solve_f2(system);
    EXPECT_EQ(result.status, SolveStatus::Unique);
    EXPECT_EQ(result.solution, bs("10"));
}

TEST(solve_f2, contradiction_and_underdetermined) {
    F2LinearSystem bad(2);
    bad.add(bs("11"), false);
    bad.add(bs("11"), true);
    EXPECT_EQ(solve_f2(bad).status, SolveStatus::NoSolution);

    F2LinearSystem loose(3);
    loose.add(bs("110"), true);
    loose.add(bs("011"), false);
    auto r = solve_f2(loose);
    EXPECT_EQ(r.status, SolveStatus::Underdetermined);
    EXPECT_EQ(r.rank, 2u);
    EXPECT_TRUE(dot(bs("110"), r.solution));
    EXPECT_FALSE(dot(bs("011"), r.solution));

    F2LinearSystem wrong(3);
    EXPECT_EQ(code_of([&] { wrong.add(bs("11"), true); }), ErrorCode::LengthMismatch);
}

TEST(solve_f2, agrees_with_enumeration_up_to_m_12) {
    std::mt19937_64 rng(1234);
    for (int trial = 0; trial < 300; trial++) {
        size_t m = 1 + rng() % 12;
        size_t count = 1 + rng() % (m + 3);
        std::vector<std::pair<uint32_t, bool>> equations;
        F2LinearSystem system(m);
        for (size_t k = 0; k < count; k++) {
            auto c = static_cast<uint32_t>(rng() & ((1u << m) - 1));
            bool rhs = rng() & 1;
            equations.emplace_back(c, rhs);
            system.add(BitString(m, c), rhs);
        }
        auto truth = reference::enumerate_solutions(equations, m);
        auto result = solve_f2(system);
        if (truth.empty()) {
            ASSERT_EQ(result.status, SolveStatus::NoSolution);
        } else if (truth.size() == 1) {
            ASSERT_EQ(result.status, SolveStatus::Unique);
            ASSERT_EQ(result.solution.value(), truth[0]);
        } else {
            ASSERT_EQ(result.status, SolveStatus::Underdetermined);
            ASSERT_EQ(size_t{1} << (m - result.rank), truth.size());
            ASSERT_TRUE(std::find(truth.begin(), truth.end(), result.solution.value()) != truth.end());
        }
    }
}

TEST(is_basis, examples) {
    std::vector<BitString> canonical;
    for (size_t i = 0; i < 5; i++) {
        canonical.push_back(BitString::unit(5, i));
    }
    EXPECT_TRUE(is_basis(canonical, 5));

    std::vector<BitString> with_zero{bs("01"), bs("00")};
    EXPECT_FALSE(is_basis(with_zero, 2));

    std::vector<BitString> dependent{bs("110"), bs("011"), bs("101")};
    EXPECT_EQ(reference::rank_bool({{0, 1, 1}, {1, 1, 0}, {1, 0, 1}}), 2u);
    EXPECT_FALSE(is_basis(dependent, 3));

    std::vector<BitString> too_few{bs("10")};
    EXPECT_FALSE(is_basis(too_few, 2));

    std::vector<BitString> mixed{bs("10"), bs("011")};
    EXPECT_EQ(code_of([&] { is_basis(mixed, 2); }), ErrorCode::LengthMismatch);
}

TEST(rank, matches_bool_reference) {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 500; trial++) {
        size_t width = 1 + rng() % 10;
        size_t count = 1 + rng() % 10;
        std::vector<BitString> vs;
        std::vector<std::vector<bool>> rows;
        for (size_t k = 0; k < count; k++) {
            auto v = static_cast<uint32_t>(rng() & ((1u << width) - 1));
            vs.emplace_back(width, v);
            std::vector<bool> row(width);
            for (size_t i = 0; i < width; i++) {
                row[i] = (v >> i) & 1;
            }
            rows.push_back(row);
        }
        ASSERT_EQ(rank(vs), reference::rank_bool(rows));
    }
}

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

#include "gpk/truth_table_io.h"

#include <random>
#include <sstream>

#include "gtest/gtest.h"

#include "gpk/errors.h"
#include "reference.h"

using namespace gpk;

static BooleanFunction parse(const std::string &text) {
    std::istringstream in(text);
    return read_truth_table(in);
}

static std::pair<size_t, size_t> error_position(const std::string &text) {
    try {
        parse(text);
    } catch (const ParseError &e) {
        return {e.line(), e.column()};
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return {0, 0};
}

TEST(truth_table_io, reads_worked_example) {
    // f(xyz) = xy
    auto f = parse("3 2\n00\n00\n01\n01\n10\n10\n11\n11\n");
    EXPECT_EQ(f.n(), 3u);
    EXPECT_EQ(f.m(), 2u);
    auto drop = BooleanFunction::bit_drop(3, 0);
    for (uint32_t x = 0; x < 8; x++) {
        EXPECT_EQ(f.peek(x), drop.peek(x));
    }
}

TEST(truth_table_io, tolerates_crlf_and_trailing_blank_lines) {
    auto f = parse("1 1\r\n0\r\n1\r\n\n\n");
    EXPECT_EQ(f.peek(uint32_t{1}), 1u);
}

TEST(truth_table_io, positional_errors) {
    EXPECT_EQ(error_position(""), std::make_pair(size_t{1}, size_t{1}));
    EXPECT_EQ(error_position("x 1\n"), std::make_pair(size_t{1}, size_t{1}));
    EXPECT_EQ(error_position("2\n"), std::make_pair(size_t{1}, size_t{2}));
    EXPECT_EQ(error_position("1 1 7\n0\n1\n"), std::make_pair(size_t{1}, size_t{5}));
    EXPECT_EQ(error_position("1 0\n"), std::make_pair(size_t{1}, size_t{3}));
    EXPECT_EQ(error_position("2 3\n000\n0a1\n111\n000\n"), std::make_pair(size_t{3}, size_t{2}));
    EXPECT_EQ(error_position("2 3\n000\n01\n111\n000\n"), std::make_pair(size_t{3}, size_t{3}));
    EXPECT_EQ(error_position("2 3\n000\n0101\n111\n000\n"), std::make_pair(size_t{3}, size_t{4}));
    EXPECT_EQ(error_position("2 1\n0\n1\n"), std::make_pair(size_t{4}, size_t{1}));
    EXPECT_EQ(error_position("1 1\n0\n1\n1\n"), std::make_pair(size_t{4}, size_t{1}));
    EXPECT_EQ(error_position("21 1\n"), std::make_pair(size_t{1}, size_t{1}));
}

TEST(truth_table_io, write_then_read_preserves_function) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; trial++) {
        size_t n = rng() % 7;
        size_t m = 1 + rng() % 6;
        auto f = reference::random_table(n, m, rng);
        std::ostringstream out;
        write_truth_table(out, f);
        auto g = parse(out.str());
        ASSERT_EQ(g.n(), n);
        ASSERT_EQ(g.m(), m);
        ASSERT_EQ(g.tabulate(), f.tabulate());
    }
}

TEST(truth_table_io, missing_file) {
    EXPECT_THROW(load_truth_table("/nonexistent/gpk/table.txt"), GpkError);
}

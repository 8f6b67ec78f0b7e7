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

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "gpk/errors.h"

namespace gpk {

namespace {

void strip_cr(std::string &line) {
    if (!line.empty() && line.back() == '\r') {
        line.pop_back();
    }
}

// Parses an unsigned decimal starting at `pos`, advancing past it.
size_t parse_count(const std::string &line, size_t &pos, size_t line_no, const char *what) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
        pos++;
    }
    size_t value = 0;
    auto [end, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), value);
    if (ec != std::errc() || end == line.data() + pos) {
        throw ParseError(line_no, pos + 1, std::string("expected ") + what);
    }
    pos = static_cast<size_t>(end - line.data());
    return value;
}

}  // namespace

BooleanFunction read_truth_table(std::istream &in) {
    std::string line;
    if (!std::getline(in, line)) {
        throw ParseError(1, 1, "empty input, expected header 'n m'");
    }
    strip_cr(line);
    size_t pos = 0;
    size_t n = parse_count(line, pos, 1, "input width n");
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
        pos++;
    }
    size_t header_m_col = pos + 1;
    size_t m = parse_count(line, pos, 1, "output width m");
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) {
        pos++;
    }
    if (pos != line.size()) {
        throw ParseError(1, pos + 1, "unexpected trailing characters in header");
    }
    if (n > MAX_TABLE_INPUT_BITS) {
        throw ParseError(1, 1, "n = " + std::to_string(n) + " exceeds the table limit of 20");
    }
    if (m == 0 || m > BitString::MAX_LEN) {
        throw ParseError(1, header_m_col, "m must be between 1 and 30");
    }

    const size_t rows = size_t{1} << n;
    std::vector<uint32_t> outputs;
    outputs.reserve(rows);
    size_t line_no = 1;
    while (outputs.size() < rows) {
        line_no++;
        if (!std::getline(in, line)) {
            throw ParseError(
                line_no, 1, "expected " + std::to_string(rows) + " output lines, found " + std::to_string(outputs.size()));
        }
        strip_cr(line);
        uint32_t value = 0;
        for (size_t c = 0; c < line.size(); c++) {
            if (c >= m) {
                throw ParseError(line_no, c + 1, "output longer than m = " + std::to_string(m));
            }
            if (line[c] != '0' && line[c] != '1') {
                throw ParseError(line_no, c + 1, std::string("invalid character '") + line[c] + "'");
            }
            value = (value << 1) | static_cast<uint32_t>(line[c] == '1');
        }
        if (line.size() < m) {
            throw ParseError(line_no, line.size() + 1, "output shorter than m = " + std::to_string(m));
        }
        outputs.push_back(value);
    }
    while (std::getline(in, line)) {
        line_no++;
        strip_cr(line);
        if (line.find_first_not_of(" \t") != std::string::npos) {
            throw ParseError(line_no, 1, "extra content after " + std::to_string(rows) + " output lines");
        }
    }
    return BooleanFunction::truth_table(n, m, std::move(outputs));
}

BooleanFunction load_truth_table(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw GpkError(ErrorCode::ParseError, "cannot open truth table file '" + path.string() + "'");
    }
    return read_truth_table(in);
}

void write_truth_table(std::ostream &out, const BooleanFunction &f) {
    auto table = f.tabulate();
    out << f.n() << ' ' << f.m() << '\n';
    for (uint32_t v : table) {
        out << BitString(f.m(), v).str() << '\n';
    }
}

}  // namespace gpk

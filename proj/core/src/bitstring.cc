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

#include "gpk/bitstring.h"

#include <ostream>

#include "gpk/errors.h"

namespace gpk {

BitString::BitString(size_t len, uint32_t value) {
    if (len > MAX_LEN) {
        throw GpkError(ErrorCode::TooLarge, "bit strings are limited to 30 bits, got " + std::to_string(len));
    }
    if (len < 32 && (value >> len) != 0) {
        throw GpkError(ErrorCode::LengthMismatch, "value has bits set beyond length " + std::to_string(len));
    }
    value_ = value;
    len_ = static_cast<uint8_t>(len);
}

BitString BitString::zero(size_t len) {
    return BitString(len, 0);
}

BitString BitString::unit(size_t len, size_t index) {
    if (index >= len) {
        throw GpkError(ErrorCode::BadIndex, "unit vector index " + std::to_string(index) + " out of range");
    }
    return BitString(len, uint32_t{1} << index);
}

BitString BitString::parse(std::string_view text) {
    if (text.size() > MAX_LEN) {
        throw GpkError(ErrorCode::TooLarge, "bit string '" + std::string(text) + "' is longer than 30 bits");
    }
    uint32_t value = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw GpkError(ErrorCode::ParseError, "invalid character in bit string '" + std::string(text) + "'");
        }
        value = (value << 1) | static_cast<uint32_t>(c == '1');
    }
    return BitString(text.size(), value);
}

bool BitString::get(size_t index) const {
    if (index >= len_) {
        throw GpkError(ErrorCode::BadIndex, "bit index " + std::to_string(index) + " out of range");
    }
    return (*this)[index];
}

BitString BitString::with_bit(size_t index, bool bit) const {
    if (index >= len_) {
        throw GpkError(ErrorCode::BadIndex, "bit index " + std::to_string(index) + " out of range");
    }
    uint32_t mask = uint32_t{1} << index;
    return BitString(len_, bit ? (value_ | mask) : (value_ & ~mask));
}

std::string BitString::str() const {
    std::string out(len_, '0');
    for (size_t i = 0; i < len_; i++) {
        if ((*this)[i]) {
            out[len_ - 1 - i] = '1';
        }
    }
    return out;
}

std::ostream &operator<<(std::ostream &out, const BitString &bits) {
    return out << bits.str();
}

static void check_same_len(const BitString &a, const BitString &b, const char *what) {
    if (a.len() != b.len()) {
        throw GpkError(
            ErrorCode::LengthMismatch,
            std::string(what) + " of strings of length " + std::to_string(a.len()) + " and " + std::to_string(b.len()));
    }
}

BitString xor_bits(const BitString &a, const BitString &b) {
    check_same_len(a, b, "xor");
    return BitString(a.len(), a.value() ^ b.value());
}

BitString operator^(const BitString &a, const BitString &b) {
    return xor_bits(a, b);
}

bool dot(const BitString &a, const BitString &b) {
    check_same_len(a, b, "pairing");
    return dot_words(a.value(), b.value());
}

}  // namespace gpk

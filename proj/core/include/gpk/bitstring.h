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

#ifndef GPK_BITSTRING_H
#define GPK_BITSTRING_H

#include <bit>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gpk {

/// A fixed-length vector over F2, packed into one word.
///
/// Index i is the coefficient of 2^i. The textual form puts the highest index
/// leftmost, so "010" is the 3-bit string with only index 1 set, and e_i is
/// the string whose single 1 sits at index i.
///
/// Length 0 is accepted so that an empty register can be described; all other
/// operations treat it as the unique element of F2^0.
class BitString {
   public:
    static constexpr size_t MAX_LEN = 30;

    BitString() = default;

    /// Takes the low `len` bits of `value`; higher bits must be zero.
    BitString(size_t len, uint32_t value);

    static BitString zero(size_t len);
    static BitString unit(size_t len, size_t index);
    static BitString parse(std::string_view text);

    size_t len() const noexcept {
        return len_;
    }
    uint32_t value() const noexcept {
        return value_;
    }
    bool operator[](size_t index) const noexcept {
        return (value_ >> index) & 1u;
    }
    bool get(size_t index) const;
    BitString with_bit(size_t index, bool bit) const;

    bool is_zero() const noexcept {
        return value_ == 0;
    }
    size_t popcount() const noexcept {
        return std::popcount(value_);
    }

    std::string str() const;

    bool operator==(const BitString &other) const = default;
    auto operator<=>(const BitString &other) const = default;

   private:
    uint32_t value_ = 0;
    uint8_t len_ = 0;
};

std::ostream &operator<<(std::ostream &out, const BitString &bits);

/// Bitwise exclusive or. Throws LengthMismatch on differing lengths.
BitString xor_bits(const BitString &a, const BitString &b);
BitString operator^(const BitString &a, const BitString &b);

/// The pairing a.b = (a_0 b_0) xor ... xor (a_{len-1} b_{len-1}).
bool dot(const BitString &a, const BitString &b);

/// Pairing on raw packed words, for hot loops that already know lengths agree.
inline bool dot_words(uint64_t a, uint64_t b) noexcept {
    return std::popcount(a & b) & 1;
}

}  // namespace gpk

#endif

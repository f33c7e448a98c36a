// Copyright 2026 The fibcube Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibcube {

/*
 * Fixed-length binary string. Coordinate 1 is the leftmost character of the
 * printed form, so lexicographic order on the printed strings is the library's
 * canonical vertex order.
 *
 * Storage is one machine word for lengths up to 64 (the common case) with a
 * heap vector for longer strings. Within a word, coordinate j sits at bit
 * 64 - j, which makes word-by-word unsigned comparison agree with
 * lexicographic order and keeps flip/weight at a couple of instructions.
 */
class BitString {
public:
    BitString() = default;

    // All-zero string of the given length.
    explicit BitString(int length) : length_(length) {
        if (length < 0) throw std::invalid_argument("BitString: negative length");
        if (length > 64) tail_.resize((length - 1) / 64, 0);
    }

    // Builds the length-n string whose printed form is the n-digit binary
    // expansion of value (coordinate n is the least significant bit). This is
    // the bridge between counting order on [0, 2^n) and lexicographic order.
    static BitString from_index(int length, std::uint64_t value) {
        if (length < 0 || length > 64)
            throw std::invalid_argument("BitString::from_index: length must be in [0, 64]");
        if (length < 64 && (value >> length) != 0)
            throw std::invalid_argument("BitString::from_index: value does not fit the length");
        BitString s(length);
        if (length > 0) s.head_ = value << (64 - length);
        return s;
    }

    static BitString parse(std::string_view text) {
        if (text.size() > static_cast<std::size_t>(INT32_MAX))
            throw std::invalid_argument("BitString::parse: string too long");
        BitString s(static_cast<int>(text.size()));
        for (int j = 1; j <= s.length_; ++j) {
            char c = text[static_cast<std::size_t>(j - 1)];
            if (c == '1') s.set_bit(j, true);
            else if (c != '0') throw std::invalid_argument("BitString::parse: expected only '0'/'1'");
        }
        return s;
    }

    int length() const noexcept { return length_; }
    bool empty() const noexcept { return length_ == 0; }

    int weight() const noexcept {
        int w = std::popcount(head_);
        for (std::uint64_t word : tail_) w += std::popcount(word);
        return w;
    }

    // Coordinates are 1-based throughout the library.
    bool bit(int j) const {
        check_index(j);
        if (j <= 64) return (head_ >> (64 - j)) & 1u;
        int off = j - 65;
        return (tail_[static_cast<std::size_t>(off / 64)] >> (63 - off % 64)) & 1u;
    }

    void set_bit(int j, bool value) {
        check_index(j);
        std::uint64_t mask;
        std::uint64_t* word;
        if (j <= 64) {
            mask = std::uint64_t{1} << (64 - j);
            word = &head_;
        } else {
            int off = j - 65;
            mask = std::uint64_t{1} << (63 - off % 64);
            word = &tail_[static_cast<std::size_t>(off / 64)];
        }
        if (value) *word |= mask;
        else *word &= ~mask;
    }

    // Returns a copy with coordinate j toggled; the string length never changes.
    BitString with_flipped(int j) const {
        BitString s = *this;
        s.set_bit(j, !bit(j));
        return s;
    }

    // Inverse of from_index; only defined for lengths up to 64.
    std::uint64_t to_index() const {
        if (length_ > 64) throw std::length_error("BitString::to_index: length exceeds 64");
        return length_ == 0 ? 0 : head_ >> (64 - length_);
    }

    std::string str() const {
        std::string out(static_cast<std::size_t>(length_), '0');
        for (int j = 1; j <= length_; ++j)
            if (bit(j)) out[static_cast<std::size_t>(j - 1)] = '1';
        return out;
    }

    friend bool operator==(const BitString& a, const BitString& b) = default;

    // Lexicographic; a proper prefix sorts before its extensions.
    std::strong_ordering operator<=>(const BitString& other) const noexcept {
        if (auto c = head_ <=> other.head_; c != 0) return c;
        std::size_t shared = tail_.size() < other.tail_.size() ? tail_.size() : other.tail_.size();
        for (std::size_t i = 0; i < shared; ++i)
            if (auto c = tail_[i] <=> other.tail_[i]; c != 0) return c;
        for (std::size_t i = shared; i < tail_.size(); ++i)
            if (tail_[i] != 0) return std::strong_ordering::greater;
        for (std::size_t i = shared; i < other.tail_.size(); ++i)
            if (other.tail_[i] != 0) return std::strong_ordering::less;
        return length_ <=> other.length_;
    }

    std::size_t hash_value() const noexcept {
        std::uint64_t h = static_cast<std::uint64_t>(length_);
        h = mix(h ^ head_);
        for (std::uint64_t word : tail_) h = mix(h ^ word);
        return static_cast<std::size_t>(h);
    }

private:
    void check_index(int j) const {
        if (j < 1 || j > length_)
            throw std::out_of_range("BitString: coordinate " + std::to_string(j) +
                                    " out of range for length " + std::to_string(length_));
    }

    static std::uint64_t mix(std::uint64_t x) noexcept {
        // splitmix64 finalizer
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return x ^ (x >> 31);
    }

    int length_ = 0;
    std::uint64_t head_ = 0;               // coordinates 1..64
    std::vector<std::uint64_t> tail_;      // coordinates 65.., same layout
};

inline BitString flip(const BitString& u, int j) { return u.with_flipped(j); }

struct BitStringHash {
    std::size_t operator()(const BitString& s) const noexcept { return s.hash_value(); }
};

}  // namespace fibcube

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

#include <string>
#include <string_view>
#include <vector>

#include "fibcube/bitstring.hpp"

namespace fibcube {

/*
 * The three vertex families, as sets of binary strings:
 *
 *  - hypercube: all 2^n strings of length n.
 *  - pth_order: strings with no run of p consecutive ones. These induce the
 *    p-th order generalized cubes inside Q_n; p = 2 is the classical
 *    Fibonacci-string family.
 *  - p_cube: strings in which any two ones are separated by at least p zeros
 *    (coordinates i < j both one forces j - i >= p + 1). p = 1 is again the
 *    classical family, so the two generalizations share that base case.
 */

enum class Family { hypercube, pth_order, p_cube };

inline const char* family_name(Family f) {
    switch (f) {
        case Family::hypercube: return "hypercube";
        case Family::pth_order: return "pth_order";
        case Family::p_cube: return "p_cube";
    }
    throw std::invalid_argument("family_name: unknown family");
}

inline Family family_from_name(std::string_view name) {
    if (name == "hypercube") return Family::hypercube;
    if (name == "pth_order") return Family::pth_order;
    if (name == "p_cube") return Family::p_cube;
    throw std::invalid_argument("family_from_name: unknown family '" + std::string(name) + "'");
}

struct FamilySpec {
    Family family = Family::hypercube;
    int n = 0;
    int p = 0;  // unused for hypercube

    static FamilySpec hypercube(int n) { return {Family::hypercube, n, 0}; }
    static FamilySpec pth_order(int n, int p) { return {Family::pth_order, n, p}; }
    static FamilySpec p_cube(int n, int p) { return {Family::p_cube, n, p}; }

    void validate() const {
        if (n < 0) throw std::domain_error("FamilySpec: n must be >= 0");
        if (family == Family::pth_order && p < 2)
            throw std::domain_error("FamilySpec: pth_order needs p >= 2");
        if (family == Family::p_cube && p < 1)
            throw std::domain_error("FamilySpec: p_cube needs p >= 1");
    }

    friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

// True iff u has no run of p consecutive ones. The empty string qualifies.
inline bool is_pth_order(const BitString& u, int p) {
    if (p < 2) throw std::domain_error("is_pth_order: p must be >= 2");
    int run = 0;
    for (int j = 1; j <= u.length(); ++j) {
        run = u.bit(j) ? run + 1 : 0;
        if (run >= p) return false;
    }
    return true;
}

// True iff consecutive ones of u are at least p + 1 coordinates apart,
// i.e. separated by at least p zeros.
inline bool is_p_string(const BitString& u, int p) {
    if (p < 1) throw std::domain_error("is_p_string: p must be >= 1");
    int last_one = 0;
    for (int j = 1; j <= u.length(); ++j) {
        if (!u.bit(j)) continue;
        if (last_one != 0 && j - last_one <= p) return false;
        last_one = j;
    }
    return true;
}

inline bool family_contains(const FamilySpec& spec, const BitString& u) {
    spec.validate();
    if (u.length() != spec.n) return false;
    switch (spec.family) {
        case Family::hypercube: return true;
        case Family::pth_order: return is_pth_order(u, spec.p);
        case Family::p_cube: return is_p_string(u, spec.p);
    }
    return false;
}

// Direct route: walk all 2^n candidates in counting order (which is
// lexicographic order of the strings) and keep the members. The membership
// tests run on the raw word; both properties are invariant under reversal,
// so bit position conventions cannot bite. Requires n <= 62.
inline std::vector<BitString> enumerate_family_filter(const FamilySpec& spec) {
    spec.validate();
    if (spec.n > 62)
        throw std::length_error("enumerate_family_filter: n too large for the 2^n scan");
    std::vector<BitString> out;
    const std::uint64_t end = std::uint64_t{1} << spec.n;
    for (std::uint64_t x = 0; x < end; ++x) {
        bool keep = true;
        if (spec.family == Family::pth_order) {
            std::uint64_t y = x;
            for (int d = 1; d < spec.p && y != 0; ++d) y &= y >> 1;
            keep = (y == 0);  // y != 0 iff some run has length >= p
        } else if (spec.family == Family::p_cube) {
            for (int d = 1; d <= spec.p; ++d)
                if ((x & (x >> d)) != 0) { keep = false; break; }
        }
        if (keep) out.push_back(BitString::from_index(spec.n, x));
    }
    return out;
}

// Recursive route, by leading block. For pth_order the blocks are
// 1^(i-1)0 for i = 1..p (plus a trailing all-ones string when n < p); for
// p_cube they are 0 and 10^p (with 10^(n-1) closing out short strings).
// Emission order is lexicographic by construction, which the tests pin
// against the filter route.
inline std::vector<BitString> enumerate_family_recursive(const FamilySpec& spec) {
    spec.validate();
    std::vector<BitString> out;
    std::string prefix;
    if (spec.family == Family::hypercube) {
        auto walk = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(BitString::parse(prefix));
                return;
            }
            for (char c : {'0', '1'}) {
                prefix.push_back(c);
                self(self, remaining - 1);
                prefix.pop_back();
            }
        };
        walk(walk, spec.n);
        return out;
    }
    if (spec.family == Family::pth_order) {
        auto walk = [&](auto&& self, int remaining) -> void {
            if (remaining == 0) {
                out.push_back(BitString::parse(prefix));
                return;
            }
            for (int i = 1; i <= spec.p && i <= remaining; ++i) {
                std::size_t mark = prefix.size();
                prefix.append(static_cast<std::size_t>(i - 1), '1');
                prefix.push_back('0');
                self(self, remaining - i);
                prefix.resize(mark);
            }
            if (remaining <= spec.p - 1) {
                // 1^remaining has no separating zero; it sorts after every
                // block-led string of the same length.
                std::size_t mark = prefix.size();
                prefix.append(static_cast<std::size_t>(remaining), '1');
                out.push_back(BitString::parse(prefix));
                prefix.resize(mark);
            }
        };
        walk(walk, spec.n);
        return out;
    }
    // p_cube
    auto walk = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(BitString::parse(prefix));
            return;
        }
        std::size_t mark = prefix.size();
        prefix.push_back('0');
        self(self, remaining - 1);
        prefix.resize(mark);
        if (remaining >= spec.p + 1) {
            prefix.push_back('1');
            prefix.append(static_cast<std::size_t>(spec.p), '0');
            self(self, remaining - spec.p - 1);
            prefix.resize(mark);
        } else {
            prefix.push_back('1');
            prefix.append(static_cast<std::size_t>(remaining - 1), '0');
            out.push_back(BitString::parse(prefix));
            prefix.resize(mark);
        }
    };
    walk(walk, spec.n);
    return out;
}

// Lexicographically sorted member list. The 2^n filter is the oracle-grade
// route and is used whenever the scan is affordable; the prefix recursion
// covers longer strings (sparse families stay small even when 2^n does not).
inline std::vector<BitString> enumerate_family(const FamilySpec& spec) {
    spec.validate();
    if (spec.n <= 24) return enumerate_family_filter(spec);
    return enumerate_family_recursive(spec);
}

// Largest weight attained in the run-limited family of length n: at most
// p - 1 ones per p consecutive coordinates of u0 gives floor((n+1)(p-1)/p).
inline int pth_order_max_weight(int n, int p) {
    if (n < 0 || p < 2) throw std::domain_error("pth_order_max_weight: need n >= 0, p >= 2");
    return static_cast<int>((static_cast<long long>(n) + 1) * (p - 1) / p);
}

/*
 * Weight bijection. Append a zero to a run-limited string and cut after each
 * zero: every piece is 1^(a-1)0 with a in [1, p], and mapping pieces to their
 * lengths yields a composition of n + 1 into parts from [1, p]. A string of
 * weight w becomes a composition into n + 1 - w parts, which is what ties
 * weight counts to the p-nomial triangle.
 */

inline std::vector<int> string_to_composition(const BitString& u, int p) {
    if (p < 2) throw std::domain_error("string_to_composition: p must be >= 2");
    if (!is_pth_order(u, p))
        throw std::invalid_argument("string_to_composition: string has a run of " +
                                    std::to_string(p) + " ones");
    std::vector<int> parts;
    int run = 0;
    for (int j = 1; j <= u.length(); ++j) {
        if (u.bit(j)) {
            ++run;
        } else {
            parts.push_back(run + 1);
            run = 0;
        }
    }
    parts.push_back(run + 1);  // the appended zero closes the last piece
    return parts;
}

inline BitString composition_to_string(const std::vector<int>& parts, int p) {
    if (p < 2) throw std::domain_error("composition_to_string: p must be >= 2");
    if (parts.empty())
        throw std::invalid_argument("composition_to_string: empty composition has no preimage");
    std::string text;
    for (int a : parts) {
        if (a < 1 || a > p)
            throw std::invalid_argument("composition_to_string: part " + std::to_string(a) +
                                        " outside [1, " + std::to_string(p) + "]");
        text.append(static_cast<std::size_t>(a - 1), '1');
        text.push_back('0');
    }
    text.pop_back();  // drop the appended zero
    return BitString::parse(text);
}

}  // namespace fibcube

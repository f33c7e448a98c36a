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

#include <map>
#include <stdexcept>
#include <vector>

#include "fibcube/bigint.hpp"

namespace fibcube {

/*
 * Integer sequences behind the two cube families:
 *
 *  - p-nomial coefficients: pnomial(b, a, p) is the coefficient of x^a in
 *    (1 + x + ... + x^(p-1))^b. For p = 2 these are the binomials.
 *  - Fibonacci p-numbers: F_n = F_{n-1} + F_{n-p-1}, the vertex counts of the
 *    distance-p cubes. p = 1 gives the classical Fibonacci numbers.
 *  - p-th order Fibonacci numbers: each term is the sum of the previous p,
 *    the vertex counts of the run-limited cubes. p = 2 is classical again.
 *  - Compositions of n into parts from [1, p], which index vertices by weight.
 */

// C(n, k) with the extension C(n, k) = 0 whenever k < 0, k > n, or n < 0.
// The inclusion-exclusion route through pnomial_alt leans on that convention.
inline Int binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int result = 1;
    for (long long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: result is C(n-k+i, i) at this point
    }
    return result;
}

// Memoized triangle of p-nomial coefficients for one fixed p, filled row by
// row with the Pascal-style recurrence
//     C(b, a) = sum over d in [0, p-1] of C(b-1, a-d).
// Row b holds the b(p-1)+1 coefficients a = 0 .. b(p-1).
class PNomialTable {
public:
    explicit PNomialTable(int p) : p_(p) {
        if (p < 2) throw std::domain_error("PNomialTable: p must be >= 2");
        rows_.push_back({Int(1)});
    }

    int p() const noexcept { return p_; }

    const std::vector<Int>& row(int b) {
        if (b < 0) throw std::domain_error("PNomialTable::row: b must be >= 0");
        while (static_cast<int>(rows_.size()) <= b) extend();
        return rows_[static_cast<std::size_t>(b)];
    }

    // Coefficient of x^a in row b; 0 outside the row.
    Int coefficient(int b, long long a) {
        const std::vector<Int>& r = row(b);
        if (a < 0 || a >= static_cast<long long>(r.size())) return 0;
        return r[static_cast<std::size_t>(a)];
    }

private:
    void extend() {
        const std::vector<Int>& prev = rows_.back();
        std::size_t width = prev.size() + static_cast<std::size_t>(p_ - 1);
        std::vector<Int> next(width);
        // Sliding window: next[a] = prev[a] + prev[a-1] + ... + prev[a-p+1].
        Int window = 0;
        for (std::size_t a = 0; a < width; ++a) {
            if (a < prev.size()) window += prev[a];
            if (a >= static_cast<std::size_t>(p_) && a - p_ < prev.size())
                window -= prev[a - static_cast<std::size_t>(p_)];
            next[a] = window;
        }
        rows_.push_back(std::move(next));
    }

    int p_;
    std::vector<std::vector<Int>> rows_;
};

// Shared entry point. Tables are per-thread, so concurrent sweeps never
// contend on a lock and never see partially built rows.
inline Int pnomial(int b, long long a, int p) {
    if (p < 2) throw std::domain_error("pnomial: p must be >= 2");
    if (b < 0) throw std::domain_error("pnomial: b must be >= 0");
    if (a < 0 || a > static_cast<long long>(b) * (p - 1)) return 0;
    thread_local std::map<int, PNomialTable> tables;
    return tables.try_emplace(p, p).first->second.coefficient(b, a);
}

// Same quantity by inclusion-exclusion over how many parts overflow p-1:
//     C(b, a)_{p-1} = sum_i (-1)^i C(b, i) C(b + a - 1 - i p, b - 1).
// Independent of the Pascal route above, which is the point: the two are
// cross-checked over their whole shared range in the tests.
inline Int pnomial_alt(int b, long long a, int p) {
    if (p < 2) throw std::domain_error("pnomial_alt: p must be >= 2");
    if (b < 0) throw std::domain_error("pnomial_alt: b must be >= 0");
    if (a < 0 || a > static_cast<long long>(b) * (p - 1)) return 0;
    if (b == 0) return a == 0 ? 1 : 0;  // empty product; the sum below wants b >= 1
    Int result = 0;
    for (long long i = 0; i <= a / p; ++i) {
        Int term = binomial(b, i) * binomial(b + a - 1 - i * p, b - 1);
        if (i % 2 == 0) result += term;
        else result -= term;
    }
    return result;
}

// Fibonacci p-numbers: 0, then p ones, then F_n = F_{n-1} + F_{n-p-1}.
inline Int fib_p(int n, int p) {
    if (p < 1) throw std::domain_error("fib_p: p must be >= 1");
    if (n < 0) throw std::domain_error("fib_p: n must be >= 0");
    if (n == 0) return 0;
    if (n <= p) return 1;
    std::vector<Int> f(static_cast<std::size_t>(n) + 1);
    f[0] = 0;
    for (int i = 1; i <= p; ++i) f[static_cast<std::size_t>(i)] = 1;
    for (int i = p + 1; i <= n; ++i)
        f[static_cast<std::size_t>(i)] =
            f[static_cast<std::size_t>(i - 1)] + f[static_cast<std::size_t>(i - p - 1)];
    return f[static_cast<std::size_t>(n)];
}

// p-th order Fibonacci numbers: p-1 zeros, a one, then each term is the sum
// of the previous p terms.
inline Int fib_pth_order(int n, int p) {
    if (p < 2) throw std::domain_error("fib_pth_order: p must be >= 2");
    if (n < 0) throw std::domain_error("fib_pth_order: n must be >= 0");
    if (n < p - 1) return 0;
    if (n == p - 1) return 1;
    std::vector<Int> f(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < p - 1; ++i) f[static_cast<std::size_t>(i)] = 0;
    f[static_cast<std::size_t>(p - 1)] = 1;
    Int window = 1;  // sum of the last p terms
    for (int i = p; i <= n; ++i) {
        f[static_cast<std::size_t>(i)] = window;
        window += f[static_cast<std::size_t>(i)];
        window -= f[static_cast<std::size_t>(i - p)];
    }
    return f[static_cast<std::size_t>(n)];
}

// Number of compositions of n into exactly k parts, each part in [1, p].
// Subtracting 1 from every part shows this is pnomial(k, n - k, p).
inline Int compositions_count(int n, int k, int p) {
    if (n < 1) throw std::domain_error("compositions_count: n must be >= 1");
    if (k < 0) throw std::domain_error("compositions_count: k must be >= 0");
    if (p < 1) throw std::domain_error("compositions_count: p must be >= 1");
    if (p == 1) return n == k ? 1 : 0;
    return pnomial(k, n - k, p);
}

// Number of compositions of n into any number of parts from [1, p]; the empty
// composition makes the n = 0 count 1.
inline Int compositions_total(int n, int p) {
    if (n < 0) throw std::domain_error("compositions_total: n must be >= 0");
    if (p < 1) throw std::domain_error("compositions_total: p must be >= 1");
    if (n == 0) return 1;
    if (p == 1) return 1;
    return fib_pth_order(n + p - 1, p);
}

// All compositions of n into exactly k parts from [1, p], lexicographic by the
// part sequence. Doubles as the enumeration oracle for compositions_count.
inline std::vector<std::vector<int>> enumerate_compositions(int n, int k, int p) {
    if (n < 0 || k < 0 || p < 1)
        throw std::domain_error("enumerate_compositions: need n >= 0, k >= 0, p >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> parts;
    auto emit = [&](auto&& self, int remaining, int slots) -> void {
        if (slots == 0) {
            if (remaining == 0) out.push_back(parts);
            return;
        }
        // Each remaining slot takes at least 1 and at most p.
        for (int a = 1; a <= p; ++a) {
            int rest = remaining - a;
            if (rest < slots - 1 || rest > (slots - 1) * p) continue;
            parts.push_back(a);
            self(self, rest, slots - 1);
            parts.pop_back();
        }
    };
    emit(emit, n, k);
    return out;
}

}  // namespace fibcube

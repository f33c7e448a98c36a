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

#include <algorithm>
#include <vector>

#include "fibcube/bigint.hpp"
#include "fibcube/bitstring.hpp"
#include "fibcube/numbers.hpp"
#include "fibcube/polynomial.hpp"
#include "fibcube/strings.hpp"

namespace fibcube {

/*
 * Closed forms for the run-limited cubes (weight, cube and distance-cube
 * polynomials; edge counts) and for the distance-p cubes (maximal cube
 * counts and tops). Each of these is checked elsewhere against the
 * brute-force oracle; nothing here looks at an actual graph.
 */

// Weight enumerator of the run-limited cube of dimension n: the number of
// weight-w vertices is pnomial(n - w + 1, w, p).
inline IntPolynomial weight_poly(int n, int p) {
    if (n < 0 || p < 2) throw std::domain_error("weight_poly: need n >= 0, p >= 2");
    int wmax = pth_order_max_weight(n, p);
    std::vector<Int> c(static_cast<std::size_t>(wmax) + 1);
    for (int w = 0; w <= wmax; ++w) c[static_cast<std::size_t>(w)] = pnomial(n - w + 1, w, p);
    return IntPolynomial(std::move(c));
}

// Cube enumerator: coefficient k counts induced Q_k. Computed as
// sum_a pnomial(n - a + 1, a, p) (1 + x)^a; the daisy identity says this is
// also weight_poly evaluated at x + 1, which the tests assert separately.
inline IntPolynomial cube_poly(int n, int p) {
    if (n < 0 || p < 2) throw std::domain_error("cube_poly: need n >= 0, p >= 2");
    IntPolynomial sum;
    IntPolynomial shifted{Int(1)};  // (1 + x)^a, built incrementally
    const IntPolynomial base{Int(1), Int(1)};
    for (int a = 0; a <= pth_order_max_weight(n, p); ++a) {
        sum += shifted * pnomial(n - a + 1, a, p);
        shifted *= base;
    }
    return sum;
}

// Distance-and-dimension enumerator: coefficient of x^k q^d counts induced
// Q_k whose bottom vertex has weight d.
inline BiPolynomial distance_cube_poly(int n, int p) {
    if (n < 0 || p < 2) throw std::domain_error("distance_cube_poly: need n >= 0, p >= 2");
    BiPolynomial sum;
    BiPolynomial shifted{Int(1)};  // (x + q)^a
    const BiPolynomial base = BiPolynomial::monomial(1, 0) + BiPolynomial::monomial(0, 1);
    for (int a = 0; a <= pth_order_max_weight(n, p); ++a) {
        BiPolynomial term = shifted;
        term *= pnomial(n - a + 1, a, p);
        sum += term;
        shifted *= base;
    }
    return sum;
}

// Number of induced Q_k, extracted from the same double sum:
// c_k = sum_{a >= k} pnomial(n - a + 1, a, p) C(a, k).
inline Int cube_count(int n, int p, int k) {
    if (n < 0 || p < 2 || k < 0) throw std::domain_error("cube_count: need n >= 0, p >= 2, k >= 0");
    Int total = 0;
    for (int a = k; a <= pth_order_max_weight(n, p); ++a)
        total += pnomial(n - a + 1, a, p) * binomial(a, k);
    return total;
}

// Number of induced Q_k at bottom distance d from 0^n:
// c_{k,d} = pnomial(n - d - k + 1, d + k, p) C(d + k, k).
inline Int cube_count_at_distance(int n, int p, int k, int d) {
    if (n < 0 || p < 2 || k < 0 || d < 0)
        throw std::domain_error("cube_count_at_distance: need n >= 0, p >= 2, k >= 0, d >= 0");
    if (d + k > pth_order_max_weight(n, p)) return 0;
    return pnomial(n - d - k + 1, d + k, p) * binomial(d + k, k);
}

// Edge count of the run-limited cube via the block recurrence
//     e(n) = sum_{i=1}^{p} e(n - i) + sum_{i=2}^{p} (i - 1) v(n - i),
// seeded with the plain hypercubes e(n) = n 2^(n-1) for n < p.
inline Int edge_count_by_recurrence(int n, int p) {
    if (n < 0 || p < 2) throw std::domain_error("edge_count_by_recurrence: need n >= 0, p >= 2");
    std::vector<Int> e(static_cast<std::size_t>(std::max(n, p - 1)) + 1);
    for (int m = 0; m <= std::max(n, p - 1); ++m) {
        if (m < p) {
            e[static_cast<std::size_t>(m)] = Int(m) * int_pow(2, std::max(m - 1, 0));
            continue;
        }
        Int total = 0;
        for (int i = 1; i <= p; ++i) total += e[static_cast<std::size_t>(m - i)];
        for (int i = 2; i <= p; ++i) total += Int(i - 1) * fib_pth_order(m - i + p, p);
        e[static_cast<std::size_t>(m)] = total;
    }
    return e[static_cast<std::size_t>(n)];
}

/*
 * Maximal cubes of the distance-p cube. Every maximal cube has bottom 0^n,
 * and its top is a weight-k string whose zero gaps (l_0, ..., l_k reading
 * left to right) satisfy l_0, l_k in [0, p] and every interior gap in
 * [p, 2p]. The count is a (p+1)-nomial coefficient.
 */

// h_k: number of maximal induced Q_k, equal to the coefficient of
// x^(n - (p+1)k + p) in (1 + x + ... + x^p)^(k+1).
inline Int maximal_cube_count(int n, int p, int k) {
    if (n < 0 || p < 1 || k < 0 || k > n)
        throw std::domain_error("maximal_cube_count: need n >= 0, p >= 1, 0 <= k <= n");
    return pnomial(k + 1, static_cast<long long>(n) - static_cast<long long>(p + 1) * k + p,
                   p + 1);
}

// Top vertices of the maximal Q_k, lexicographically sorted. k >= 1; the only
// k = 0 maximal cube is the lone vertex of the n = 0 graph.
inline std::vector<BitString> maximal_top_vertices(int n, int p, int k) {
    if (n < 0 || p < 1 || k < 1)
        throw std::domain_error("maximal_top_vertices: need n >= 0, p >= 1, k >= 1");
    std::vector<BitString> out;
    std::vector<int> gaps(static_cast<std::size_t>(k) + 1);
    int zeros = n - k;
    if (zeros < 0) return out;
    auto place = [&](auto&& self, int idx, int remaining) -> void {
        bool last = idx == k;
        int lo = (idx == 0 || last) ? 0 : p;
        int hi = (idx == 0 || last) ? p : 2 * p;
        if (last) {
            if (remaining >= lo && remaining <= hi) {
                gaps[static_cast<std::size_t>(idx)] = remaining;
                std::string text;
                for (int g = 0; g <= k; ++g) {
                    text.append(static_cast<std::size_t>(gaps[static_cast<std::size_t>(g)]), '0');
                    if (g < k) text.push_back('1');
                }
                out.push_back(BitString::parse(text));
            }
            return;
        }
        for (int l = lo; l <= hi && l <= remaining; ++l) {
            gaps[static_cast<std::size_t>(idx)] = l;
            self(self, idx + 1, remaining - l);
        }
    };
    place(place, 0, zeros);
    std::sort(out.begin(), out.end());
    return out;
}

// Gap-shift bijection behind maximal_cube_count: drop p zeros from every
// interior gap of a maximal top, then swap zeros and ones. The image is a
// run-limited string (runs at most p) of length n - pk + p and weight
// n - (p+1)k + p, and the map is invertible.
inline BitString maximal_top_to_run_string(const BitString& top, int p) {
    if (p < 1) throw std::domain_error("maximal_top_to_run_string: p must be >= 1");
    const int n = top.length();
    std::vector<int> gaps;
    int zeros = 0;
    for (int j = 1; j <= n; ++j) {
        if (top.bit(j)) {
            gaps.push_back(zeros);
            zeros = 0;
        } else {
            ++zeros;
        }
    }
    gaps.push_back(zeros);
    const int k = static_cast<int>(gaps.size()) - 1;
    if (k < 1) throw std::invalid_argument("maximal_top_to_run_string: top must contain a one");
    for (int g = 0; g <= k; ++g) {
        int lo = (g == 0 || g == k) ? 0 : p;
        int hi = (g == 0 || g == k) ? p : 2 * p;
        if (gaps[static_cast<std::size_t>(g)] < lo || gaps[static_cast<std::size_t>(g)] > hi)
            throw std::invalid_argument("maximal_top_to_run_string: gap " + std::to_string(g) +
                                        " violates the maximal-top shape");
    }
    std::string text;
    for (int g = 0; g <= k; ++g) {
        int l = gaps[static_cast<std::size_t>(g)] - ((g == 0 || g == k) ? 0 : p);
        text.append(static_cast<std::size_t>(l), '1');  // zeros of the gap, swapped
        if (g < k) text.push_back('0');                 // the one, swapped
    }
    return BitString::parse(text);
}

inline BitString run_string_to_maximal_top(const BitString& s, int p) {
    if (p < 1) throw std::domain_error("run_string_to_maximal_top: p must be >= 1");
    std::vector<int> runs;  // lengths of the maximal runs of ones, zero-separated
    int run = 0;
    for (int j = 1; j <= s.length(); ++j) {
        if (s.bit(j)) {
            ++run;
        } else {
            runs.push_back(run);
            run = 0;
        }
    }
    runs.push_back(run);
    const int k = static_cast<int>(runs.size()) - 1;
    if (k < 1)
        throw std::invalid_argument("run_string_to_maximal_top: string must contain a zero");
    std::string text;
    for (int g = 0; g <= k; ++g) {
        if (runs[static_cast<std::size_t>(g)] > p)
            throw std::invalid_argument("run_string_to_maximal_top: run of more than p ones");
        int l = runs[static_cast<std::size_t>(g)] + ((g == 0 || g == k) ? 0 : p);
        text.append(static_cast<std::size_t>(l), '0');
        if (g < k) text.push_back('1');
    }
    return BitString::parse(text);
}

namespace detail {
// Recurrence route for the maximal-cube enumerator:
//     H_n = x (H_{n-p-1} + H_{n-p-2} + ... + H_{n-2p-2})   for n >= 2p + 1,
// from the closed small cases. H_0 = 1 (the single vertex is its own maximal
// Q_0); for n in [1, p+1] the graph is a star with n edges, H_n = n x; for
// n in [p+2, 2p] the maximal cubes are squares and edges,
// H_n = ((n-p-1)(n-p)/2) x^2 + (2p - n + 2) x.
inline std::vector<IntPolynomial> maximal_cube_polys_by_recurrence(int n, int p) {
    std::vector<IntPolynomial> h(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) {
        if (m == 0) {
            h[0] = IntPolynomial{Int(1)};
        } else if (m <= p + 1) {
            h[static_cast<std::size_t>(m)] = IntPolynomial{Int(0), Int(m)};
        } else if (m <= 2 * p) {
            Int sq = Int(m - p - 1) * Int(m - p) / 2;
            h[static_cast<std::size_t>(m)] = IntPolynomial{Int(0), Int(2 * p - m + 2), sq};
        } else {
            IntPolynomial sum;
            for (int i = 1; i <= p + 1; ++i) sum += h[static_cast<std::size_t>(m - p - i)];
            h[static_cast<std::size_t>(m)] = sum * IntPolynomial{Int(0), Int(1)};
        }
    }
    return h;
}
}  // namespace detail

// Maximal-cube enumerator H of the distance-p cube: coefficient k counts the
// maximal induced Q_k. Computed both from maximal_cube_count and by the
// recurrence above; a disagreement between the two routes is a logic error
// and throws rather than picking a side.
inline IntPolynomial maximal_cube_poly(int n, int p) {
    if (n < 0 || p < 1) throw std::domain_error("maximal_cube_poly: need n >= 0, p >= 1");
    std::vector<Int> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) c[static_cast<std::size_t>(k)] = maximal_cube_count(n, p, k);
    IntPolynomial direct(std::move(c));
    IntPolynomial recurred = detail::maximal_cube_polys_by_recurrence(n, p).back();
    if (direct != recurred)
        throw std::logic_error("maximal_cube_poly: closed form and recurrence disagree at n = " +
                               std::to_string(n) + ", p = " + std::to_string(p) + " (" +
                               direct.str() + " vs " + recurred.str() + ")");
    return direct;
}

}  // namespace fibcube

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

#include "fibcube/bigint.hpp"
#include "fibcube/polynomial.hpp"

namespace fibcube {

/*
 * Ordinary generating functions in t whose coefficients may involve x and q.
 * A RationalGF is numerator/denominator, both polynomials in t with
 * BiPolynomial coefficients; pure number series are the constant special
 * case. Expansion runs the forward recurrence induced by the denominator,
 * which must have constant term 1 so the recurrence solves for each
 * coefficient exactly.
 */

struct RationalGF {
    std::vector<BiPolynomial> numerator;    // ascending in t
    std::vector<BiPolynomial> denominator;  // ascending in t; denominator[0] == 1

    void validate() const {
        if (denominator.empty() || !(denominator[0] == BiPolynomial(Int(1))))
            throw std::domain_error("RationalGF: denominator must have constant term 1");
    }
};

// Coefficients of t^0 .. t^N: with denominator 1 + d_1 t + ... the expansion
// satisfies s_n = num_n - sum_{i >= 1} d_i s_{n-i}.
inline std::vector<BiPolynomial> expand(const RationalGF& gf, int N) {
    gf.validate();
    if (N < 0) throw std::domain_error("expand: N must be >= 0");
    std::vector<BiPolynomial> s(static_cast<std::size_t>(N) + 1);
    for (int m = 0; m <= N; ++m) {
        BiPolynomial acc;
        if (m < static_cast<int>(gf.numerator.size())) acc = gf.numerator[static_cast<std::size_t>(m)];
        for (int i = 1; i < static_cast<int>(gf.denominator.size()) && i <= m; ++i)
            acc -= gf.denominator[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(m - i)];
        s[static_cast<std::size_t>(m)] = std::move(acc);
    }
    return s;
}

// Convenience for the number-valued series in the catalog.
inline std::vector<Int> expand_integer(const RationalGF& gf, int N) {
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (const BiPolynomial& c : expand(gf, N)) out.push_back(c.to_constant());
    return out;
}

namespace detail {
// 1 + t + ... + t^d with constant coefficients.
inline std::vector<BiPolynomial> geometric_block(int d) {
    return std::vector<BiPolynomial>(static_cast<std::size_t>(d) + 1, BiPolynomial(Int(1)));
}

// Product of two t-polynomials.
inline std::vector<BiPolynomial> t_mul(const std::vector<BiPolynomial>& a,
                                       const std::vector<BiPolynomial>& b) {
    std::vector<BiPolynomial> c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] += a[i] * b[j];
    return c;
}
}  // namespace detail

/*
 * The named series. "Run-limited" entries describe the p-th order cubes and
 * require p >= 2; "distance-p" entries (fib_p, maxcube) accept p >= 1.
 *
 *   order_pth_order   (1 + t + ... + t^(p-1)) / (1 - t - ... - t^p)
 *   size_pth_order    (t + 2t^2 + ... + (p-1)t^(p-1)) / (1 - t - ... - t^p)^2
 *   fib_p             t / (1 - t - t^(p+1))
 *   fib_pth_order     t^(p-1) / (1 - t - ... - t^p)
 *   weight            sum_i x^i t^i (i < p) over 1 - t * (that sum)
 *   cube              the weight series with x replaced by x + 1
 *   distance_cube     the weight series with x replaced by x + q
 *   maxcube           (1 + x t (1+...+t^p)(1+...+t^(p-1))) / (1 - x t^(p+1) (1+...+t^p))
 */
inline RationalGF catalog(std::string_view name, int p) {
    auto need = [&](int minimum) {
        if (p < minimum)
            throw std::domain_error("catalog: series '" + std::string(name) + "' needs p >= " +
                                    std::to_string(minimum));
    };
    auto run_limited_denominator = [&] {
        std::vector<BiPolynomial> den = detail::geometric_block(p);
        for (int i = 1; i <= p; ++i) den[static_cast<std::size_t>(i)] = BiPolynomial(Int(-1));
        return den;
    };
    // Numerator/denominator skeleton of the weight series after substituting
    // sub for x: numerator coefficient i is sub^i, denominator is
    // 1 - t * numerator.
    auto weight_shape = [&](const BiPolynomial& sub) {
        RationalGF gf;
        gf.numerator.resize(static_cast<std::size_t>(p));
        BiPolynomial power(Int(1));
        for (int i = 0; i < p; ++i) {
            gf.numerator[static_cast<std::size_t>(i)] = power;
            power *= sub;
        }
        gf.denominator.assign(static_cast<std::size_t>(p) + 1, BiPolynomial());
        gf.denominator[0] = BiPolynomial(Int(1));
        for (int i = 0; i < p; ++i) {
            BiPolynomial c = gf.numerator[static_cast<std::size_t>(i)];
            c *= Int(-1);
            gf.denominator[static_cast<std::size_t>(i) + 1] = std::move(c);
        }
        return gf;
    };

    if (name == "order_pth_order") {
        need(2);
        return {detail::geometric_block(p - 1), run_limited_denominator()};
    }
    if (name == "size_pth_order") {
        need(2);
        RationalGF gf;
        gf.numerator.resize(static_cast<std::size_t>(p));
        for (int i = 1; i < p; ++i) gf.numerator[static_cast<std::size_t>(i)] = BiPolynomial(Int(i));
        gf.denominator = detail::t_mul(run_limited_denominator(), run_limited_denominator());
        return gf;
    }
    if (name == "fib_p") {
        need(1);
        RationalGF gf;
        gf.numerator = {BiPolynomial(), BiPolynomial(Int(1))};
        gf.denominator.assign(static_cast<std::size_t>(p) + 2, BiPolynomial());
        gf.denominator[0] = BiPolynomial(Int(1));
        gf.denominator[1] = BiPolynomial(Int(-1));
        gf.denominator[static_cast<std::size_t>(p) + 1] = BiPolynomial(Int(-1));
        return gf;
    }
    if (name == "fib_pth_order") {
        need(2);
        RationalGF gf;
        gf.numerator.assign(static_cast<std::size_t>(p), BiPolynomial());
        gf.numerator[static_cast<std::size_t>(p) - 1] = BiPolynomial(Int(1));
        gf.denominator = run_limited_denominator();
        return gf;
    }
    if (name == "weight") {
        need(2);
        return weight_shape(BiPolynomial::monomial(1, 0));
    }
    if (name == "cube") {
        need(2);
        return weight_shape(BiPolynomial::monomial(1, 0) + BiPolynomial(Int(1)));
    }
    if (name == "distance_cube") {
        need(2);
        return weight_shape(BiPolynomial::monomial(1, 0) + BiPolynomial::monomial(0, 1));
    }
    if (name == "maxcube") {
        need(1);
        const BiPolynomial x = BiPolynomial::monomial(1, 0);
        RationalGF gf;
        // numerator: 1 + x t (1 + ... + t^p)(1 + ... + t^(p-1))
        std::vector<BiPolynomial> prod =
            detail::t_mul(detail::geometric_block(p), detail::geometric_block(p - 1));
        gf.numerator.assign(prod.size() + 1, BiPolynomial());
        gf.numerator[0] = BiPolynomial(Int(1));
        for (std::size_t i = 0; i < prod.size(); ++i) gf.numerator[i + 1] += x * prod[i];
        // denominator: 1 - x t^(p+1) (1 + ... + t^p)
        gf.denominator.assign(static_cast<std::size_t>(2 * p) + 2, BiPolynomial());
        gf.denominator[0] = BiPolynomial(Int(1));
        for (int i = 0; i <= p; ++i) {
            BiPolynomial c = x;
            c *= Int(-1);
            gf.denominator[static_cast<std::size_t>(p + 1 + i)] = std::move(c);
        }
        return gf;
    }
    throw std::invalid_argument("catalog: unknown series '" + std::string(name) + "'");
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {
        "order_pth_order", "size_pth_order", "fib_p", "fib_pth_order",
        "weight", "cube", "distance_cube", "maxcube"};
    return names;
}

// Induced-cube counts c_k for n = 0..N, read off the weight series: expand,
// differentiate each coefficient k times in x, evaluate at x = 1 and divide
// by k!. The division must be exact; a remainder would mean the series and
// the differentiation disagree, so it throws.
inline std::vector<Int> cube_counts_by_derivative(int p, int k, int N) {
    if (p < 2 || k < 0 || N < 0)
        throw std::domain_error("cube_counts_by_derivative: need p >= 2, k >= 0, N >= 0");
    const Int k_factorial = factorial(k);
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(N) + 1);
    for (const BiPolynomial& c : expand(catalog("weight", p), N)) {
        IntPolynomial poly = c.to_x();
        for (int i = 0; i < k; ++i) poly = poly.derivative();
        Int value = poly.evaluate(1);
        if (value % k_factorial != 0)
            throw std::logic_error("cube_counts_by_derivative: k-th derivative not divisible by k!");
        out.push_back(value / k_factorial);
    }
    return out;
}

}  // namespace fibcube

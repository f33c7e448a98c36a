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

#include <catch2/catch_amalgamated.hpp>

#include "fibcube/formulas.hpp"
#include "fibcube/numbers.hpp"
#include "fibcube/series.hpp"

using namespace fibcube;

TEST_CASE("expansion runs the denominator recurrence", "[series]") {
    // t / (1 - t - t^2) is the classical Fibonacci series.
    RationalGF fib{{BiPolynomial(), BiPolynomial(Int(1))},
                   {BiPolynomial(Int(1)), BiPolynomial(Int(-1)), BiPolynomial(Int(-1))}};
    CHECK(expand_integer(fib, 7) == std::vector<Int>{0, 1, 1, 2, 3, 5, 8, 13});

    // 1 / (1 - 2t) doubles.
    RationalGF doubling{{BiPolynomial(Int(1))}, {BiPolynomial(Int(1)), BiPolynomial(Int(-2))}};
    CHECK(expand_integer(doubling, 5) == std::vector<Int>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("expansion rejects malformed input", "[series]") {
    RationalGF no_den{{BiPolynomial(Int(1))}, {}};
    CHECK_THROWS_AS(expand(no_den, 3), std::domain_error);
    RationalGF bad_den{{BiPolynomial(Int(1))}, {BiPolynomial(Int(2))}};
    CHECK_THROWS_AS(expand(bad_den, 3), std::domain_error);
    RationalGF ok{{BiPolynomial(Int(1))}, {BiPolynomial(Int(1))}};
    CHECK_THROWS_AS(expand(ok, -1), std::domain_error);
    CHECK_THROWS_AS(catalog("no_such_series", 2), std::invalid_argument);
    CHECK_THROWS_AS(catalog("weight", 1), std::domain_error);
    // Integer readout of an x-valued series has no meaning.
    CHECK_THROWS_AS(expand_integer(catalog("weight", 2), 3), std::domain_error);
}

TEST_CASE("number series match the closed sequences", "[series]") {
    CHECK(expand_integer(catalog("order_pth_order", 2), 5) ==
          std::vector<Int>{1, 2, 3, 5, 8, 13});
    CHECK(expand_integer(catalog("size_pth_order", 3), 4) == std::vector<Int>{0, 1, 4, 9, 22});
    CHECK(expand_integer(catalog("size_pth_order", 2), 6) ==
          std::vector<Int>{0, 1, 2, 5, 10, 20, 38});
    CHECK(expand_integer(catalog("fib_p", 1), 6) == std::vector<Int>{0, 1, 1, 2, 3, 5, 8});

    const int N = 25;
    for (int p = 2; p <= 4; ++p) {
        std::vector<Int> orders = expand_integer(catalog("order_pth_order", p), N);
        std::vector<Int> sizes = expand_integer(catalog("size_pth_order", p), N);
        std::vector<Int> fibs = expand_integer(catalog("fib_pth_order", p), N);
        for (int n = 0; n <= N; ++n) {
            CHECK(orders[static_cast<std::size_t>(n)] == fib_pth_order(n + p, p));
            CHECK(sizes[static_cast<std::size_t>(n)] == cube_count(n, p, 1));
            CHECK(fibs[static_cast<std::size_t>(n)] == fib_pth_order(n, p));
        }
    }
    for (int p = 1; p <= 4; ++p) {
        std::vector<Int> values = expand_integer(catalog("fib_p", p), N);
        for (int n = 0; n <= N; ++n)
            CHECK(values[static_cast<std::size_t>(n)] == fib_p(n, p));
    }
}

TEST_CASE("polynomial series match the closed forms", "[series]") {
    for (int p = 2; p <= 4; ++p) {
        const int N = 14;
        std::vector<BiPolynomial> weight = expand(catalog("weight", p), N);
        std::vector<BiPolynomial> cube = expand(catalog("cube", p), N);
        std::vector<BiPolynomial> distance = expand(catalog("distance_cube", p), N);
        for (int n = 0; n <= N; ++n) {
            CHECK(weight[static_cast<std::size_t>(n)].to_x() == weight_poly(n, p));
            CHECK(cube[static_cast<std::size_t>(n)].to_x() == cube_poly(n, p));
            CHECK(distance[static_cast<std::size_t>(n)] == distance_cube_poly(n, p));
        }
    }
}

TEST_CASE("maximal cube series", "[series]") {
    std::vector<BiPolynomial> p2 = expand(catalog("maxcube", 2), 3);
    CHECK(p2[3].to_x() == IntPolynomial{0, 3});
    std::vector<BiPolynomial> p1 = expand(catalog("maxcube", 1), 4);
    CHECK(p1[4].to_x() == IntPolynomial{0, 0, 3});

    for (int p = 1; p <= 3; ++p) {
        const int N = 20;
        std::vector<BiPolynomial> h = expand(catalog("maxcube", p), N);
        for (int n = 0; n <= N; ++n)
            CHECK(h[static_cast<std::size_t>(n)].to_x() == maximal_cube_poly(n, p));
    }
}

TEST_CASE("shift identity between the maximal series and its denominator", "[series]") {
    // t^p H(t) + (1 + ... + t^(p-1)) equals the geometric numerator over the
    // same denominator; checking the expansions to high order exercises both
    // the series and the expander.
    const int N = 30;
    for (int p = 1; p <= 3; ++p) {
        RationalGF maxcube = catalog("maxcube", p);
        std::vector<BiPolynomial> h = expand(maxcube, N);
        RationalGF shifted{detail::geometric_block(p), maxcube.denominator};
        std::vector<BiPolynomial> rhs = expand(shifted, N);
        for (int m = 0; m <= N; ++m) {
            BiPolynomial lhs;
            if (m >= p) lhs += h[static_cast<std::size_t>(m - p)];
            if (m < p) lhs += BiPolynomial(Int(1));
            CHECK(lhs == rhs[static_cast<std::size_t>(m)]);
        }
    }
}

TEST_CASE("cube counts by differentiating the weight series", "[series]") {
    CHECK(cube_counts_by_derivative(2, 1, 5) == std::vector<Int>{0, 1, 2, 5, 10, 20});
    CHECK_THROWS_AS(cube_counts_by_derivative(1, 0, 3), std::domain_error);
    for (int p = 2; p <= 3; ++p)
        for (int k = 0; k <= 3; ++k) {
            std::vector<Int> counts = cube_counts_by_derivative(p, k, 12);
            for (int n = 0; n <= 12; ++n)
                CHECK(counts[static_cast<std::size_t>(n)] == cube_count(n, p, k));
        }
}

TEST_CASE("catalog names cover the catalog", "[series]") {
    CHECK(catalog_names().size() == 8);
    for (const std::string& name : catalog_names()) {
        RationalGF gf = catalog(name, name == "fib_p" || name == "maxcube" ? 1 : 2);
        CHECK_NOTHROW(gf.validate());
        CHECK_NOTHROW(expand(gf, 5));
    }
}

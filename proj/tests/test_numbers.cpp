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

#include "fibcube/numbers.hpp"

using namespace fibcube;

TEST_CASE("binomial handles the full out-of-range convention", "[numbers]") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(-1, -1) == 0);
    CHECK(binomial(52, 26) == Int("495918532948104"));
}

TEST_CASE("trinomial triangle matches the reference rows", "[numbers]") {
    PNomialTable table(3);
    const std::vector<std::vector<long long>> rows = {
        {1},
        {1, 1, 1},
        {1, 2, 3, 2, 1},
        {1, 3, 6, 7, 6, 3, 1},
        {1, 4, 10, 16, 19, 16, 10, 4, 1},
        {1, 5, 15, 30, 45, 51, 45, 30, 15, 5, 1},
    };
    for (std::size_t b = 0; b < rows.size(); ++b) {
        const std::vector<Int>& actual = table.row(static_cast<int>(b));
        REQUIRE(actual.size() == rows[b].size());
        for (std::size_t a = 0; a < rows[b].size(); ++a) CHECK(actual[a] == rows[b][a]);
    }
}

TEST_CASE("pnomial spot values and range behavior", "[numbers]") {
    CHECK(pnomial(4, 4, 3) == 19);
    CHECK(pnomial(5, 5, 3) == 51);
    CHECK(pnomial(6, 9, 3) == 50);
    CHECK(pnomial(7, 0, 4) == 1);
    CHECK(pnomial(3, 7, 3) == 0);  // above b(p-1)
    CHECK(pnomial(3, -1, 3) == 0);
    CHECK(pnomial(0, 0, 5) == 1);
    CHECK_THROWS_AS(pnomial(2, 1, 1), std::domain_error);
    CHECK_THROWS_AS(pnomial(-1, 0, 3), std::domain_error);
}

TEST_CASE("pnomial rows are palindromic with row sum p^b", "[numbers]") {
    for (int p = 2; p <= 5; ++p) {
        PNomialTable table(p);
        for (int b = 0; b <= 10; ++b) {
            const std::vector<Int>& row = table.row(b);
            Int sum = 0;
            for (std::size_t a = 0; a < row.size(); ++a) {
                CHECK(row[a] == row[row.size() - 1 - a]);
                sum += row[a];
            }
            CHECK(sum == int_pow(p, b));
        }
    }
}

TEST_CASE("pnomial at p = 2 is the binomial triangle", "[numbers]") {
    for (int b = 0; b <= 12; ++b)
        for (int a = -1; a <= b + 1; ++a) CHECK(pnomial(b, a, 2) == binomial(b, a));
}

TEST_CASE("inclusion-exclusion route agrees with the Pascal route", "[numbers]") {
    CHECK(pnomial_alt(6, 9, 3) == 50);
    CHECK(pnomial_alt(0, 0, 3) == 1);  // empty-product case, special-cased
    for (int p = 2; p <= 5; ++p)
        for (int b = 0; b <= 12; ++b)
            for (long long a = -2; a <= static_cast<long long>(b) * (p - 1) + 2; ++a)
                CHECK(pnomial_alt(b, a, p) == pnomial(b, a, p));
}

TEST_CASE("fibonacci p-number spot values", "[numbers]") {
    CHECK(fib_p(0, 2) == 0);
    CHECK(fib_p(3, 2) == 1);
    CHECK(fib_p(6, 2) == 4);
    CHECK(fib_p(6, 1) == 8);  // classical Fibonacci at p = 1
    // F_n = n - p in the first post-initial stretch
    for (int p = 1; p <= 5; ++p)
        for (int n = p + 1; n <= 2 * p + 2; ++n) CHECK(fib_p(n, p) == n - p);
    CHECK_THROWS_AS(fib_p(-1, 2), std::domain_error);
    CHECK_THROWS_AS(fib_p(3, 0), std::domain_error);
}

TEST_CASE("p-th order fibonacci spot values", "[numbers]") {
    CHECK(fib_pth_order(7, 3) == 13);
    CHECK(fib_pth_order(6, 4) == 4);
    CHECK(fib_pth_order(9, 2) == 34);
    CHECK(fib_pth_order(0, 3) == 0);
    CHECK(fib_pth_order(2, 3) == 1);
    // 2^(n-p) while the window still covers the single seed
    for (int p = 2; p <= 6; ++p)
        for (int n = p; n <= 2 * p - 1; ++n) CHECK(fib_pth_order(n, p) == int_pow(2, n - p));
    CHECK_THROWS_AS(fib_pth_order(3, 1), std::domain_error);
}

TEST_CASE("the two fibonacci generalizations share the classical case", "[numbers]") {
    for (int n = 0; n <= 30; ++n) CHECK(fib_p(n, 1) == fib_pth_order(n, 2));
}

TEST_CASE("composition counts against the enumeration oracle", "[numbers]") {
    CHECK(compositions_count(4, 2, 3) == 3);
    CHECK(compositions_count(5, 2, 2) == 0);  // parts capped at 2 cannot reach 5
    CHECK(compositions_count(5, 5, 3) == 1);
    CHECK(compositions_total(4, 2) == 5);
    CHECK(compositions_total(0, 3) == 1);
    CHECK(compositions_total(6, 3) == 24);
    for (int p = 1; p <= 4; ++p) {
        for (int n = 1; n <= 12; ++n) {
            Int total = 0;
            for (int k = 0; k <= n; ++k) {
                Int count = compositions_count(n, k, p);
                CHECK(count == Int(enumerate_compositions(n, k, p).size()));
                total += count;
            }
            CHECK(total == compositions_total(n, p));
        }
    }
}

TEST_CASE("composition enumeration is lexicographic and in range", "[numbers]") {
    auto list = enumerate_compositions(4, 2, 3);
    REQUIRE(list.size() == 3);
    CHECK(list[0] == std::vector<int>{1, 3});
    CHECK(list[1] == std::vector<int>{2, 2});
    CHECK(list[2] == std::vector<int>{3, 1});
    CHECK(enumerate_compositions(3, 3, 1) == std::vector<std::vector<int>>{{1, 1, 1}});
    CHECK(enumerate_compositions(2, 3, 2).empty());
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k <= n; ++k) {
            auto all = enumerate_compositions(n, k, 3);
            for (std::size_t i = 0; i < all.size(); ++i) {
                int sum = 0;
                for (int a : all[i]) {
                    CHECK(a >= 1);
                    CHECK(a <= 3);
                    sum += a;
                }
                CHECK(sum == n);
                if (i > 0) CHECK(all[i - 1] < all[i]);
            }
        }
}

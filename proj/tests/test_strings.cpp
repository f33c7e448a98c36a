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
#include "fibcube/strings.hpp"
#include "test_util.hpp"

using namespace fibcube;

namespace {
std::vector<std::string> rendered(const std::vector<BitString>& strings) {
    std::vector<std::string> out;
    for (const BitString& s : strings) out.push_back(s.str());
    return out;
}
}  // namespace

TEST_CASE("run predicate", "[strings]") {
    CHECK_FALSE(is_pth_order(BitString::parse("0111"), 3));
    CHECK(is_pth_order(BitString::parse("110110"), 3));
    CHECK(is_pth_order(BitString(), 2));
    CHECK(is_pth_order(BitString::parse("0"), 2));
    CHECK_FALSE(is_pth_order(BitString::parse("11"), 2));
    CHECK_THROWS_AS(is_pth_order(BitString::parse("01"), 1), std::domain_error);
}

TEST_CASE("separation predicate", "[strings]") {
    CHECK(is_p_string(BitString::parse("10010"), 2));
    CHECK_FALSE(is_p_string(BitString::parse("1010"), 2));
    CHECK(is_p_string(BitString::parse("1010"), 1));
    CHECK(is_p_string(BitString::parse("00000"), 4));
    CHECK(is_p_string(BitString(), 1));
    CHECK_THROWS_AS(is_p_string(BitString::parse("01"), 0), std::domain_error);
}

TEST_CASE("predicates agree with character-scanning oracles", "[strings]") {
    for (int n = 0; n <= 12; ++n)
        for (const std::string& s : testutil::all_strings(n)) {
            BitString u = BitString::parse(s);
            for (int p = 2; p <= 4; ++p)
                CHECK(is_pth_order(u, p) == !testutil::has_run_of_ones(s, p));
            for (int p = 1; p <= 3; ++p)
                CHECK(is_p_string(u, p) == testutil::ones_separated(s, p));
        }
}

TEST_CASE("family spec validation", "[strings]") {
    CHECK_THROWS_AS(FamilySpec::pth_order(4, 1).validate(), std::domain_error);
    CHECK_THROWS_AS(FamilySpec::p_cube(4, 0).validate(), std::domain_error);
    CHECK_THROWS_AS(FamilySpec::hypercube(-1).validate(), std::domain_error);
    CHECK_NOTHROW(FamilySpec::p_cube(4, 1).validate());
    CHECK(family_from_name("pth_order") == Family::pth_order);
    CHECK(family_name(Family::p_cube) == std::string("p_cube"));
    CHECK_THROWS_AS(family_from_name("nope"), std::invalid_argument);
}

TEST_CASE("enumeration reproduces the frozen small families", "[strings]") {
    CHECK(rendered(enumerate_family(FamilySpec::pth_order(4, 3))) ==
          std::vector<std::string>{"0000", "0001", "0010", "0011", "0100", "0101", "0110", "1000",
                                   "1001", "1010", "1011", "1100", "1101"});
    CHECK(rendered(enumerate_family(FamilySpec::p_cube(3, 2))) ==
          std::vector<std::string>{"000", "001", "010", "100"});
    CHECK(rendered(enumerate_family(FamilySpec::hypercube(2))) ==
          std::vector<std::string>{"00", "01", "10", "11"});
    CHECK(rendered(enumerate_family(FamilySpec::pth_order(0, 2))) ==
          std::vector<std::string>{""});
}

TEST_CASE("enumeration counts follow the two fibonacci sequences", "[strings]") {
    for (int n = 0; n <= 18; ++n) {
        for (int p = 2; p <= 5; ++p)
            CHECK(Int(enumerate_family(FamilySpec::pth_order(n, p)).size()) ==
                  fib_pth_order(n + p, p));
        for (int p = 1; p <= 4; ++p)
            CHECK(Int(enumerate_family(FamilySpec::p_cube(n, p)).size()) ==
                  fib_p(n + p + 1, p));
    }
}

TEST_CASE("filter and recursive generators agree, sorted and duplicate-free", "[strings]") {
    std::vector<FamilySpec> specs;
    for (int n = 0; n <= 14; ++n) {
        specs.push_back(FamilySpec::hypercube(std::min(n, 10)));
        for (int p = 2; p <= 4; ++p) specs.push_back(FamilySpec::pth_order(n, p));
        for (int p = 1; p <= 3; ++p) specs.push_back(FamilySpec::p_cube(n, p));
    }
    for (const FamilySpec& spec : specs) {
        std::vector<BitString> filtered = enumerate_family_filter(spec);
        CHECK(filtered == enumerate_family_recursive(spec));
        CHECK(std::is_sorted(filtered.begin(), filtered.end()));
        CHECK(std::adjacent_find(filtered.begin(), filtered.end()) == filtered.end());
        for (const BitString& u : filtered) CHECK(family_contains(spec, u));
    }
}

TEST_CASE("families are closed downward", "[strings]") {
    // Clearing any single 1 keeps membership; by induction the whole
    // downward closure is inside, which is what makes these daisy graphs.
    std::vector<FamilySpec> specs;
    for (int p = 2; p <= 4; ++p) specs.push_back(FamilySpec::pth_order(10, p));
    for (int p = 1; p <= 3; ++p) specs.push_back(FamilySpec::p_cube(10, p));
    for (const FamilySpec& spec : specs)
        for (const BitString& u : enumerate_family(spec))
            for (int j = 1; j <= u.length(); ++j)
                if (u.bit(j)) CHECK(family_contains(spec, flip(u, j)));
}

TEST_CASE("maximum weight in the run-limited family", "[strings]") {
    CHECK(pth_order_max_weight(4, 3) == 3);
    CHECK(pth_order_max_weight(0, 2) == 0);
    for (int p = 2; p <= 5; ++p)
        for (int n = 0; n <= 12; ++n) {
            int best = 0;
            for (const BitString& u : enumerate_family(FamilySpec::pth_order(n, p)))
                best = std::max(best, u.weight());
            CHECK(best == pth_order_max_weight(n, p));
        }
}

TEST_CASE("composition bijection on the frozen examples", "[strings]") {
    CHECK(string_to_composition(BitString::parse("0110"), 3) == std::vector<int>{1, 3, 1});
    CHECK(composition_to_string({2, 2, 1}, 2).str() == "1010");
    CHECK(string_to_composition(BitString(), 2) == std::vector<int>{1});
    CHECK(composition_to_string({1}, 3).str() == "");
    CHECK_THROWS_AS(string_to_composition(BitString::parse("111"), 3), std::invalid_argument);
    CHECK_THROWS_AS(composition_to_string({1, 4}, 3), std::invalid_argument);
    CHECK_THROWS_AS(composition_to_string({}, 3), std::invalid_argument);
}

TEST_CASE("composition bijection round-trips the whole family", "[strings]") {
    for (int p = 2; p <= 4; ++p)
        for (int n = 0; n <= 10; ++n) {
            for (const BitString& u : enumerate_family(FamilySpec::pth_order(n, p))) {
                std::vector<int> parts = string_to_composition(u, p);
                int sum = 0;
                for (int a : parts) sum += a;
                CHECK(sum == n + 1);
                CHECK(static_cast<int>(parts.size()) == n + 1 - u.weight());
                CHECK(composition_to_string(parts, p) == u);
            }
            // Weight classes line up with composition counts of n + 1.
            for (int w = 0; w <= pth_order_max_weight(n, p); ++w) {
                Int strings_of_weight = 0;
                for (const BitString& u : enumerate_family(FamilySpec::pth_order(n, p)))
                    if (u.weight() == w) ++strings_of_weight;
                CHECK(strings_of_weight == compositions_count(n + 1, n + 1 - w, p));
            }
        }
}

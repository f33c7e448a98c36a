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

#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fibcube/graphs.hpp"
#include "fibcube/json_io.hpp"
#include "fibcube/numbers.hpp"
#include "test_util.hpp"

using namespace fibcube;

TEST_CASE("adjacency equals the Hamming-distance-1 relation", "[graphs]") {
    // Independent edge oracle: all vertex pairs, character-level distance.
    for (const FamilySpec& spec :
         {FamilySpec::pth_order(6, 2), FamilySpec::pth_order(5, 3), FamilySpec::p_cube(6, 2),
          FamilySpec::hypercube(4)}) {
        Graph g = build(spec);
        std::int64_t expected_edges = 0;
        for (std::int32_t v = 0; v < g.vertex_count(); ++v)
            for (std::int32_t w = 0; w < g.vertex_count(); ++w) {
                bool adjacent = testutil::hamming(g.vertex(v).str(), g.vertex(w).str()) == 1;
                bool listed = std::find(g.neighbors(v).begin(), g.neighbors(v).end(), w) !=
                              g.neighbors(v).end();
                CHECK(adjacent == listed);
                if (adjacent && v < w) ++expected_edges;
            }
        CHECK(g.edge_count() == expected_edges);
    }
}

TEST_CASE("frozen orders and sizes", "[graphs]") {
    Graph g43 = build(FamilySpec::pth_order(4, 3));
    CHECK(g43.vertex_count() == 13);
    CHECK(g43.edge_count() == 22);
    Graph g42 = build(FamilySpec::pth_order(4, 2));
    CHECK(g42.vertex_count() == 8);
    CHECK(g42.edge_count() == 10);
    Graph q3 = build(FamilySpec::hypercube(3));
    CHECK(q3.vertex_count() == 8);
    CHECK(q3.edge_count() == 12);
    Graph empty = build(FamilySpec::pth_order(0, 2));
    CHECK(empty.vertex_count() == 1);
    CHECK(empty.edge_count() == 0);
    CHECK(order(g43) == 13);
    CHECK(size(g43) == 22);
}

TEST_CASE("orders follow the two fibonacci sequences", "[graphs]") {
    for (int n = 0; n <= 16; ++n) {
        for (int p = 2; p <= 5; ++p)
            CHECK(order(build(FamilySpec::pth_order(n, p))) == fib_pth_order(n + p, p));
        for (int p = 1; p <= 4; ++p)
            CHECK(order(build(FamilySpec::p_cube(n, p))) == fib_p(n + p + 1, p));
    }
}

TEST_CASE("run-limited graph is the full hypercube below p", "[graphs]") {
    for (int p = 2; p <= 5; ++p)
        for (int n = 0; n < p; ++n) {
            Graph limited = build(FamilySpec::pth_order(n, p));
            Graph cube = build(FamilySpec::hypercube(n));
            CHECK(limited.vertices() == cube.vertices());
            CHECK(limited.adjacency() == cube.adjacency());
        }
}

TEST_CASE("dimension cap is enforced and overridable", "[graphs]") {
    CHECK_THROWS_AS(build(FamilySpec::pth_order(25, 2)), std::length_error);
    CHECK_NOTHROW(build(FamilySpec::pth_order(25, 2), 26));
    CHECK_THROWS_AS(build(FamilySpec::hypercube(30), 24), std::length_error);
}

TEST_CASE("vertex lookup round-trips", "[graphs]") {
    Graph g = build(FamilySpec::p_cube(7, 2));
    for (std::int32_t v = 0; v < g.vertex_count(); ++v)
        CHECK(g.index_of(g.vertex(v)) == v);
    CHECK_FALSE(g.index_of(BitString::parse("1010000")).has_value());  // not separated
    CHECK_FALSE(g.contains(BitString::parse("00")));                   // wrong length
}

TEST_CASE("weight distribution sums to the order", "[graphs]") {
    for (int p = 2; p <= 4; ++p)
        for (int n = 0; n <= 12; ++n) {
            Graph g = build(FamilySpec::pth_order(n, p));
            std::vector<Int> dist = weight_distribution(g);
            Int total = 0;
            for (const Int& c : dist) total += c;
            CHECK(total == order(g));
        }
}

TEST_CASE("block decomposition of the frozen example", "[graphs]") {
    FundamentalDecomposition d = fundamental_decomposition(build(FamilySpec::pth_order(4, 3)));
    CHECK(d.block_sizes == std::vector<std::int64_t>{7, 4, 2});
    CHECK(d.cross_edge_total == 8);
    // Block sizes are the orders of the next-smaller graphs.
    CHECK(d.cross_edge_counts[1][0] == 4);
    CHECK(d.cross_edge_counts[2][0] == 2);
    CHECK(d.cross_edge_counts[2][1] == 2);

    FundamentalDecomposition tiny = fundamental_decomposition(build(FamilySpec::pth_order(2, 2)));
    CHECK(tiny.block_sizes == std::vector<std::int64_t>{2, 1});
    CHECK(tiny.cross_edge_total == 1);
}

TEST_CASE("block decomposition accounts for every edge", "[graphs]") {
    for (int p = 2; p <= 4; ++p)
        for (int n = p; n <= 12; ++n) {
            Graph g = build(FamilySpec::pth_order(n, p));
            FundamentalDecomposition d = fundamental_decomposition(g);
            std::int64_t internal = 0;
            for (int i = 0; i < p; ++i) {
                CHECK(d.block_sizes[static_cast<std::size_t>(i)] ==
                      build(FamilySpec::pth_order(n - i - 1, p)).vertex_count());
                CHECK(d.block_internal_edges[static_cast<std::size_t>(i)] ==
                      build(FamilySpec::pth_order(n - i - 1, p)).edge_count());
                internal += d.block_internal_edges[static_cast<std::size_t>(i)];
            }
            CHECK(internal + d.cross_edge_total == g.edge_count());
        }
}

TEST_CASE("block decomposition rejects wrong inputs", "[graphs]") {
    CHECK_THROWS_AS(fundamental_decomposition(build(FamilySpec::p_cube(4, 2))), std::domain_error);
    CHECK_THROWS_AS(fundamental_decomposition(build(FamilySpec::pth_order(2, 3))),
                    std::domain_error);
}

TEST_CASE("graph JSON dump is deterministic and complete", "[graphs]") {
    Graph g = build(FamilySpec::pth_order(3, 2));
    nlohmann::json j = graph_to_json(g);
    CHECK(j["family"] == "pth_order");
    CHECK(j["n"] == 3);
    CHECK(j["p"] == 2);
    CHECK(j["vertices"] ==
          nlohmann::json({"000", "001", "010", "100", "101"}));
    CHECK(j["edges"] == nlohmann::json({{0, 1}, {0, 2}, {0, 3}, {1, 4}, {3, 4}}));
    CHECK(graph_to_json(build(FamilySpec::pth_order(3, 2))).dump() == j.dump());
}

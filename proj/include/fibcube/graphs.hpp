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
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "fibcube/bigint.hpp"
#include "fibcube/strings.hpp"

namespace fibcube {

// Soft ceiling on the dimension of anything we materialize as an explicit
// graph; callers (and the CLI) may raise it deliberately.
inline constexpr int kDefaultMaxDimension = 24;

/*
 * A family graph: the subgraph of the hypercube induced by a string family.
 * Vertices are stored in lexicographic order and everything downstream refers
 * to them by their position in that list. Two vertices are adjacent iff their
 * strings differ in exactly one coordinate, so adjacency is built by probing a
 * hash index with the n single-bit flips of each vertex.
 */
class Graph {
public:
    const FamilySpec& spec() const noexcept { return spec_; }
    int dimension() const noexcept { return spec_.n; }
    const std::vector<BitString>& vertices() const noexcept { return vertices_; }
    const BitString& vertex(std::int32_t index) const { return vertices_.at(static_cast<std::size_t>(index)); }
    const std::vector<std::vector<std::int32_t>>& adjacency() const noexcept { return adjacency_; }
    const std::vector<std::int32_t>& neighbors(std::int32_t index) const {
        return adjacency_.at(static_cast<std::size_t>(index));
    }

    std::int64_t vertex_count() const noexcept { return static_cast<std::int64_t>(vertices_.size()); }
    std::int64_t edge_count() const noexcept { return edge_count_; }

    std::optional<std::int32_t> index_of(const BitString& u) const {
        auto it = index_.find(u);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const BitString& u) const { return index_.contains(u); }

    friend Graph build(const FamilySpec& spec, int max_dimension);

private:
    FamilySpec spec_;
    std::vector<BitString> vertices_;
    std::vector<std::vector<std::int32_t>> adjacency_;
    std::unordered_map<BitString, std::int32_t, BitStringHash> index_;
    std::int64_t edge_count_ = 0;
};

inline Graph build(const FamilySpec& spec, int max_dimension = kDefaultMaxDimension) {
    spec.validate();
    if (spec.n > max_dimension)
        throw std::length_error("build: dimension " + std::to_string(spec.n) +
                                " exceeds the cap of " + std::to_string(max_dimension) +
                                " (raise the cap explicitly to proceed)");
    Graph g;
    g.spec_ = spec;
    g.vertices_ = enumerate_family(spec);
    g.index_.reserve(g.vertices_.size() * 2);
    for (std::size_t i = 0; i < g.vertices_.size(); ++i)
        g.index_.emplace(g.vertices_[i], static_cast<std::int32_t>(i));
    g.adjacency_.resize(g.vertices_.size());
    for (std::size_t i = 0; i < g.vertices_.size(); ++i) {
        const BitString& u = g.vertices_[i];
        std::vector<std::int32_t>& row = g.adjacency_[i];
        for (int j = 1; j <= spec.n; ++j) {
            if (auto other = g.index_of(u.with_flipped(j)))
                row.push_back(*other);
        }
        std::sort(row.begin(), row.end());
        g.edge_count_ += static_cast<std::int64_t>(row.size());
    }
    g.edge_count_ /= 2;  // every edge was seen from both endpoints
    return g;
}

inline Int order(const Graph& g) { return g.vertex_count(); }
inline Int size(const Graph& g) { return g.edge_count(); }

// Vertex counts by weight; entry w counts the vertices with exactly w ones.
// Length n + 1 regardless of trailing zeros.
inline std::vector<Int> weight_distribution(const Graph& g) {
    std::vector<Int> counts(static_cast<std::size_t>(g.dimension()) + 1);
    for (const BitString& u : g.vertices()) ++counts[static_cast<std::size_t>(u.weight())];
    return counts;
}

/*
 * Leading-block decomposition of a run-limited graph (n >= p). Grouping
 * vertices by their leading block 1^(i-1)0 splits the graph into p blocks;
 * stripping the block leaves exactly the family of length n - i, and each
 * vertex 1^(i-1)0x has exactly one neighbor 1^(j-1)01^(i-j-1)0x in every
 * earlier block j < i. fundamental_decomposition verifies all of that
 * directly on the built graph and reports the counts; a structural violation
 * throws logic_error rather than returning garbage.
 */
struct FundamentalDecomposition {
    int p = 0;
    std::vector<std::int64_t> block_sizes;                    // block i at [i-1]
    std::vector<std::vector<std::int64_t>> cross_edge_counts; // [i-1][j-1], j < i
    std::vector<std::int64_t> block_internal_edges;           // edges inside block i
    std::int64_t cross_edge_total = 0;
};

inline FundamentalDecomposition fundamental_decomposition(const Graph& g) {
    const FamilySpec& spec = g.spec();
    if (spec.family != Family::pth_order)
        throw std::domain_error("fundamental_decomposition: defined for the pth_order family");
    const int n = spec.n;
    const int p = spec.p;
    if (n < p)
        throw std::domain_error("fundamental_decomposition: needs n >= p");

    FundamentalDecomposition d;
    d.p = p;
    d.block_sizes.assign(static_cast<std::size_t>(p), 0);
    d.cross_edge_counts.assign(static_cast<std::size_t>(p),
                               std::vector<std::int64_t>(static_cast<std::size_t>(p), 0));
    d.block_internal_edges.assign(static_cast<std::size_t>(p), 0);

    // Block of a vertex: 1 + length of its leading run of ones. Since n >= p
    // the all-ones string is not a member, so every vertex has a zero.
    std::vector<int> block(static_cast<std::size_t>(g.vertex_count()));
    std::vector<std::vector<std::string>> suffixes(static_cast<std::size_t>(p));
    for (std::int64_t v = 0; v < g.vertex_count(); ++v) {
        const BitString& u = g.vertex(static_cast<std::int32_t>(v));
        int run = 0;
        while (run < n && u.bit(run + 1)) ++run;
        if (run >= p) throw std::logic_error("fundamental_decomposition: run of p ones in a vertex");
        int i = run + 1;
        block[static_cast<std::size_t>(v)] = i;
        ++d.block_sizes[static_cast<std::size_t>(i - 1)];
        suffixes[static_cast<std::size_t>(i - 1)].push_back(u.str().substr(static_cast<std::size_t>(i)));
    }

    // (a) Stripping block i leaves exactly the length n - i family.
    for (int i = 1; i <= p; ++i) {
        std::vector<std::string> expected;
        for (const BitString& s : enumerate_family(FamilySpec::pth_order(n - i, p)))
            expected.push_back(s.str());
        std::vector<std::string>& got = suffixes[static_cast<std::size_t>(i - 1)];
        std::sort(got.begin(), got.end());
        if (got != expected)
            throw std::logic_error("fundamental_decomposition: block " + std::to_string(i) +
                                   " suffixes are not the length-" + std::to_string(n - i) +
                                   " family");
    }

    // (b) Count edges by block pair and check the downward matchings: every
    // vertex of block i has exactly one neighbor in each block j < i, namely
    // the string with its leading block shortened to 1^(j-1)0.
    for (std::int64_t v = 0; v < g.vertex_count(); ++v) {
        int i = block[static_cast<std::size_t>(v)];
        std::vector<int> per_block(static_cast<std::size_t>(p) + 1, 0);
        for (std::int32_t w : g.neighbors(static_cast<std::int32_t>(v))) {
            int j = block[static_cast<std::size_t>(w)];
            ++per_block[static_cast<std::size_t>(j)];
            if (j == i && w > v) ++d.block_internal_edges[static_cast<std::size_t>(i - 1)];
            if (j < i) ++d.cross_edge_counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
        for (int j = 1; j < i; ++j) {
            if (per_block[static_cast<std::size_t>(j)] != 1)
                throw std::logic_error("fundamental_decomposition: vertex " +
                                       g.vertex(static_cast<std::int32_t>(v)).str() +
                                       " has " + std::to_string(per_block[static_cast<std::size_t>(j)]) +
                                       " neighbors in block " + std::to_string(j));
            // The unique neighbor is the one with coordinate j flipped to 0.
            const BitString& u = g.vertex(static_cast<std::int32_t>(v));
            BitString expected = u.with_flipped(j);
            auto idx = g.index_of(expected);
            bool found = false;
            if (idx) {
                for (std::int32_t w : g.neighbors(static_cast<std::int32_t>(v)))
                    if (w == *idx) { found = true; break; }
            }
            if (!found)
                throw std::logic_error("fundamental_decomposition: expected matching edge missing at " +
                                       u.str());
        }
    }
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j < i; ++j) {
            if (d.cross_edge_counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                d.block_sizes[static_cast<std::size_t>(i - 1)])
                throw std::logic_error("fundamental_decomposition: block pair (" + std::to_string(i) +
                                       "," + std::to_string(j) + ") is not a perfect matching from block " +
                                       std::to_string(i));
            d.cross_edge_total +=
                d.cross_edge_counts[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
        }
    return d;
}

}  // namespace fibcube

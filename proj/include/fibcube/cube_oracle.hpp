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
#include <bit>
#include <functional>
#include <map>
#include <utility>
#include <vector>

#include "fibcube/graphs.hpp"

namespace fibcube {

/*
 * Brute-force ground truth for induced hypercubes. An induced Q_k inside a
 * family graph is determined by its bottom vertex b and top vertex t: the
 * support is the set of coordinates where t is 1 and b is 0, and the cube is
 * present iff every string between b and t (agreeing with them off the
 * support) is a vertex. Everything here works by hash membership tests, with
 * no reliance on the closed forms it is used to check.
 */

struct InducedHypercube {
    BitString bottom;
    BitString top;
    int dimension = 0;

    // Ascending coordinates free inside the cube.
    std::vector<int> support() const {
        std::vector<int> s;
        for (int j = 1; j <= top.length(); ++j)
            if (top.bit(j) && !bottom.bit(j)) s.push_back(j);
        return s;
    }

    friend bool operator==(const InducedHypercube& a, const InducedHypercube& b) {
        return a.bottom == b.bottom && a.top == b.top;
    }
    friend std::strong_ordering operator<=>(const InducedHypercube& a, const InducedHypercube& b) {
        if (auto c = a.bottom <=> b.bottom; c != 0) return c;
        return a.top <=> b.top;
    }
};

// Calls visit once per induced cube. The second argument holds the cube's
// 2^k vertex strings (valid only during the call); its last element is the
// bottom. Cubes are produced grouped by top vertex in lexicographic order;
// callers needing (bottom, top) order sort afterwards.
inline void visit_induced_cubes(
    const Graph& g,
    const std::function<void(const InducedHypercube&, const std::vector<BitString>&)>& visit) {
    const int n = g.dimension();
    std::vector<BitString> cube;
    std::vector<int> ones;
    std::vector<BitString> half;
    for (const BitString& top : g.vertices()) {
        ones.clear();
        for (int j = 1; j <= n; ++j)
            if (top.bit(j)) ones.push_back(j);
        cube.assign(1, top);
        auto grow = [&](auto&& self, std::size_t next) -> void {
            visit(InducedHypercube{cube.back(), top,
                                   std::countr_zero(cube.size())},  // cube holds 2^k vertices
                  cube);
            for (std::size_t idx = next; idx < ones.size(); ++idx) {
                int j = ones[idx];
                // The candidate extension clears coordinate j across the whole
                // cube; it exists iff every cleared copy is a vertex. Probing
                // stops at the first miss, which is what keeps the walk cheap.
                half.clear();
                bool ok = true;
                for (const BitString& v : cube) {
                    BitString w = v.with_flipped(j);
                    if (!g.contains(w)) { ok = false; break; }
                    half.push_back(std::move(w));
                }
                if (!ok) continue;
                std::size_t mark = cube.size();
                cube.insert(cube.end(), half.begin(), half.end());
                self(self, idx + 1);
                cube.resize(mark);
            }
        };
        grow(grow, 0);
    }
}

// All induced cubes, sorted by (bottom, top). Dimension 0 cubes (single
// vertices) are included.
inline std::vector<InducedHypercube> enumerate_induced_cubes(const Graph& g) {
    std::vector<InducedHypercube> out;
    visit_induced_cubes(g, [&](const InducedHypercube& h, const std::vector<BitString>&) {
        out.push_back(h);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Number of induced Q_k by dimension k.
inline std::map<int, Int> cube_census(const Graph& g) {
    std::map<int, Int> counts;
    visit_induced_cubes(g, [&](const InducedHypercube& h, const std::vector<BitString>&) {
        ++counts[h.dimension];
    });
    return counts;
}

// Counts refined by the weight d of the bottom vertex, i.e. its distance to
// the all-zero vertex. Requires 0^n to be a member, which holds for every
// family this library builds.
inline std::map<std::pair<int, int>, Int> distance_classified_counts(const Graph& g) {
    if (!g.contains(BitString(g.dimension())))
        throw std::domain_error("distance_classified_counts: graph lacks the all-zero vertex");
    std::map<std::pair<int, int>, Int> counts;
    visit_induced_cubes(g, [&](const InducedHypercube& h, const std::vector<BitString>&) {
        ++counts[{h.dimension, h.bottom.weight()}];
    });
    return counts;
}

namespace detail {
// Shared maximality test: some coordinate off the support can be flipped
// across every vertex of the cube while staying inside the graph iff the cube
// extends to a Q_{k+1}. Coordinates where bottom and top are both 1 probe the
// downward extension, both 0 the upward one.
inline bool cube_is_maximal(const Graph& g, const InducedHypercube& h,
                            const std::vector<BitString>& vertices) {
    for (int j = 1; j <= g.dimension(); ++j) {
        if (h.top.bit(j) != h.bottom.bit(j)) continue;  // already free
        bool extends = true;
        for (const BitString& v : vertices) {
            if (!g.contains(v.with_flipped(j))) { extends = false; break; }
        }
        if (extends) return false;
    }
    return true;
}
}  // namespace detail

inline bool is_maximal_cube(const Graph& g, const InducedHypercube& h) {
    // Regenerate the cube's vertices from bottom and support.
    std::vector<int> support = h.support();
    std::vector<BitString> vertices{h.bottom};
    for (int j : support) {
        std::size_t count = vertices.size();
        for (std::size_t i = 0; i < count; ++i)
            vertices.push_back(vertices[i].with_flipped(j));
    }
    for (const BitString& v : vertices)
        if (!g.contains(v))
            throw std::invalid_argument("is_maximal_cube: not an induced cube of this graph");
    return detail::cube_is_maximal(g, h, vertices);
}

// Induced cubes contained in no larger induced cube, sorted by (bottom, top).
inline std::vector<InducedHypercube> enumerate_maximal_cubes(const Graph& g) {
    std::vector<InducedHypercube> out;
    visit_induced_cubes(g, [&](const InducedHypercube& h, const std::vector<BitString>& vertices) {
        if (detail::cube_is_maximal(g, h, vertices)) out.push_back(h);
    });
    std::sort(out.begin(), out.end());
    return out;
}

// Number of maximal induced Q_k by dimension k.
inline std::map<int, Int> maximal_cube_census(const Graph& g) {
    std::map<int, Int> counts;
    visit_induced_cubes(g, [&](const InducedHypercube& h, const std::vector<BitString>& vertices) {
        if (detail::cube_is_maximal(g, h, vertices)) ++counts[h.dimension];
    });
    return counts;
}

}  // namespace fibcube

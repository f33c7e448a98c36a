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

#include <json.hpp>

#include "fibcube/cube_oracle.hpp"
#include "fibcube/graphs.hpp"

namespace fibcube {

/*
 * JSON dump formats. Both are deterministic: vertices in lexicographic
 * order, edges as sorted index pairs, cube records sorted by (bottom, top).
 */

inline nlohmann::json spec_to_json(const FamilySpec& spec) {
    nlohmann::json j{{"family", family_name(spec.family)}, {"n", spec.n}};
    if (spec.family != Family::hypercube) j["p"] = spec.p;
    return j;
}

inline nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json j = spec_to_json(g.spec());
    nlohmann::json vertices = nlohmann::json::array();
    for (const BitString& u : g.vertices()) vertices.push_back(u.str());
    nlohmann::json edges = nlohmann::json::array();
    for (std::int64_t v = 0; v < g.vertex_count(); ++v)
        for (std::int32_t w : g.neighbors(static_cast<std::int32_t>(v)))
            if (w > v) edges.push_back({v, w});
    j["vertices"] = std::move(vertices);
    j["edges"] = std::move(edges);
    return j;
}

inline nlohmann::json cubes_to_json(const std::vector<InducedHypercube>& cubes) {
    nlohmann::json records = nlohmann::json::array();
    for (const InducedHypercube& h : cubes)
        records.push_back({{"bottom", h.bottom.str()},
                           {"top", h.top.str()},
                           {"k", h.dimension},
                           {"d", h.bottom.weight()}});
    return records;
}

}  // namespace fibcube

/*
 * Copyright 2026 The Symmetria Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <vector>

#include "symmetria/fullerene/graph.hpp"

namespace symmetria::fullerene {

enum class Bond { single, double_bond };

/// One bond per edge of the graph it was computed for (same indexing as edges).
struct BondAssignment {
    std::vector<Bond> bonds;
    bool canonical = false;  // true when the hexagon-hexagon rule was used

    std::size_t double_count() const;
};

/// Maximum matching by Edmonds' blossom algorithm; mate[v] = -1 if unmatched.
std::vector<int> maximum_matching(int vertex_count, const std::vector<Edge>& edges);

/// Double bonds on a perfect matching. Tries the hexagon-hexagon edges first,
/// falls back to a general matching. Throws InfeasibleError listing uncovered
/// vertices when no perfect matching exists.
BondAssignment kekule(const PolyhedralGraph& g);

/// Vertices not incident to exactly one double bond.
std::vector<int> bond_violations(const PolyhedralGraph& g, const BondAssignment& a);

}  // namespace symmetria::fullerene

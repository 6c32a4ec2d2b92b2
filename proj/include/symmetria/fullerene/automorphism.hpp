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

#include <cstdint>
#include <functional>
#include <vector>

#include "symmetria/fullerene/graph.hpp"

namespace symmetria::fullerene {

using Permutation = std::vector<int>;

/// Calls `visit` for every adjacency-preserving bijection a → b. Returning
/// false from `visit` stops the search. With face refinement, a vertex may only
/// map to one with the same multiset of incident face sizes.
void for_each_isomorphism(const PolyhedralGraph& a, const PolyhedralGraph& b,
                          const std::function<bool(const Permutation&)>& visit,
                          bool face_refinement = true);

void for_each_automorphism(const PolyhedralGraph& g, const std::function<bool(const Permutation&)>& visit,
                           bool face_refinement = true);

std::uint64_t automorphism_order(const PolyhedralGraph& g, bool face_refinement = true);

bool isomorphic(const PolyhedralGraph& a, const PolyhedralGraph& b);

/// True if the permutation carries every face of g onto a face of g of the same size.
bool preserves_faces(const PolyhedralGraph& g, const Permutation& p);

}  // namespace symmetria::fullerene

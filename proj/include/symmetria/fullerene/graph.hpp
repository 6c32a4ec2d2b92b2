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

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace symmetria::fullerene {

using Point3 = std::array<double, 3>;
using Edge = std::array<int, 2>;  // stored with e[0] < e[1]
using Face = std::vector<int>;    // cyclic vertex order

struct PolyhedralGraph {
    std::vector<Point3> vertices;
    std::vector<Edge> edges;
    std::vector<Face> faces;

    std::size_t vertex_count() const noexcept { return vertices.size(); }
    std::size_t edge_count() const noexcept { return edges.size(); }
    std::size_t face_count() const noexcept { return faces.size(); }

    /// Sorted neighbour lists.
    std::vector<std::vector<int>> adjacency() const;

    /// Index into `edges`, or -1.
    int edge_index(int u, int v) const;

    /// For every edge, the faces that contain it (in face order).
    std::vector<std::vector<int>> edge_faces() const;

    /// Structural problems: self-loops, duplicate edges, faces walking off the
    /// edge set, edges not on exactly two faces. Empty means valid.
    std::vector<std::string> problems() const;
};

Edge make_edge(int u, int v);

/// Edges = all pairs at the minimum pairwise distance; faces traced from the
/// angular order of neighbours around each vertex (convex embeddings).
PolyhedralGraph polyhedron_from_embedding(std::vector<Point3> vertices);

/// Faces traced for a given edge set on a convex embedding.
PolyhedralGraph polyhedron_from_embedding(std::vector<Point3> vertices, std::vector<Edge> edges);

PolyhedralGraph build_icosahedron();
PolyhedralGraph build_truncated_icosahedron();
PolyhedralGraph build_cube();
PolyhedralGraph build_dodecahedron();

/// A graph with no faces: the n-cycle.
PolyhedralGraph build_cycle(int n);

/// A graph with no faces: the path on n vertices.
PolyhedralGraph build_path(int n);

int euler_check(const PolyhedralGraph& g);

struct Census {
    std::size_t vertices, edges, faces, pentagons, hexagons, other_faces;
    std::size_t pent_hex_edges, hex_hex_edges, pent_pent_edges;
    bool cubic;  // every vertex of degree 3
};

Census census(const PolyhedralGraph& g);

struct IsolatedPentagonResult {
    bool isolated;
    std::optional<std::pair<int, int>> witness;  // two adjacent pentagonal faces
};

IsolatedPentagonResult isolated_pentagon_check(const PolyhedralGraph& g);

/// Rotates edge (u, v) by a quarter turn inside its two incident faces. The two
/// faces containing the edge lose a vertex, the faces at its ends gain one.
PolyhedralGraph stone_wales_rotate(const PolyhedralGraph& g, int u, int v);

/// Maximum spread of vertex distances from the centroid.
double centroid_distance_spread(const PolyhedralGraph& g);

}  // namespace symmetria::fullerene

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

#include "symmetria/fullerene/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <set>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::fullerene {

namespace {

Point3 sub(const Point3& a, const Point3& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }
double dot(const Point3& a, const Point3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
Point3 cross(const Point3& a, const Point3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double dist(const Point3& a, const Point3& b) { return std::sqrt(dot(sub(a, b), sub(a, b))); }

Point3 centroid(const std::vector<Point3>& pts) {
    Point3 c{0, 0, 0};
    for (const auto& p : pts)
        for (int i = 0; i < 3; ++i) c[i] += p[i];
    for (double& ci : c) ci /= static_cast<double>(pts.size());
    return c;
}

/// Neighbours of each vertex in counter-clockwise order seen from outside.
std::vector<std::vector<int>> rotation_system(const PolyhedralGraph& g) {
    const auto adj = g.adjacency();
    const Point3 c = centroid(g.vertices);
    std::vector<std::vector<int>> rot(adj.size());
    for (std::size_t v = 0; v < adj.size(); ++v) {
        if (adj[v].empty()) continue;
        Point3 n = sub(g.vertices[v], c);
        const double len = std::sqrt(dot(n, n));
        if (len == 0.0) throw DomainError("vertex at the centroid; embedding is not convex");
        for (double& x : n) x /= len;
        auto tangent = [&](int w) {
            Point3 d = sub(g.vertices[static_cast<std::size_t>(w)], g.vertices[v]);
            const double k = dot(d, n);
            for (int i = 0; i < 3; ++i) d[i] -= k * n[i];
            return d;
        };
        const Point3 e1 = tangent(adj[v][0]);
        const Point3 e2 = cross(n, e1);
        std::vector<std::pair<double, int>> order;
        for (int w : adj[v]) {
            const Point3 d = tangent(w);
            order.emplace_back(std::atan2(dot(d, e2), dot(d, e1)), w);
        }
        std::sort(order.begin(), order.end());
        for (const auto& [angle, w] : order) rot[v].push_back(w);
    }
    return rot;
}

void trace_faces(PolyhedralGraph& g) {
    const auto rot = rotation_system(g);
    std::set<std::pair<int, int>> used;
    g.faces.clear();
    for (const auto& e : g.edges) {
        for (const auto& [s, t] : {std::pair{e[0], e[1]}, std::pair{e[1], e[0]}}) {
            if (used.count({s, t})) continue;
            Face face;
            int u = s, v = t;
            while (!used.count({u, v})) {
                used.insert({u, v});
                face.push_back(u);
                const auto& around = rot[static_cast<std::size_t>(v)];
                const auto pos = std::find(around.begin(), around.end(), u) - around.begin();
                const int w = around[static_cast<std::size_t>((pos + static_cast<long>(around.size()) - 1) %
                                                              static_cast<long>(around.size()))];
                u = v;
                v = w;
            }
            g.faces.push_back(std::move(face));
        }
    }
}

std::vector<Edge> shortest_pairs(const std::vector<Point3>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (dist(pts[i], pts[j]) < best * (1.0 + 1e-9))
                edges.push_back({static_cast<int>(i), static_cast<int>(j)});
    return edges;
}

/// Even permutations of (x, y, z) with all sign choices on nonzero entries.
void add_cyclic_signed(std::vector<Point3>& out, double x, double y, double z) {
    const Point3 base{x, y, z};
    for (int shift = 0; shift < 3; ++shift) {
        for (int signs = 0; signs < 8; ++signs) {
            Point3 p;
            bool duplicate = false;
            for (int i = 0; i < 3; ++i) {
                const double value = base[static_cast<std::size_t>((i + shift) % 3)];
                const bool flip = signs & (1 << i);
                if (flip && value == 0.0) duplicate = true;
                p[static_cast<std::size_t>(i)] = flip ? -value : value;
            }
            if (!duplicate) out.push_back(p);
        }
    }
}

}  // namespace

Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

std::vector<std::vector<int>> PolyhedralGraph::adjacency() const {
    std::vector<std::vector<int>> adj(vertices.size());
    for (const auto& e : edges) {
        adj[static_cast<std::size_t>(e[0])].push_back(e[1]);
        adj[static_cast<std::size_t>(e[1])].push_back(e[0]);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

int PolyhedralGraph::edge_index(int u, int v) const {
    const Edge key = make_edge(u, v);
    const auto it = std::find(edges.begin(), edges.end(), key);
    return it == edges.end() ? -1 : static_cast<int>(it - edges.begin());
}

std::vector<std::vector<int>> PolyhedralGraph::edge_faces() const {
    std::map<Edge, int> index;
    for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> out(edges.size());
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            const auto it = index.find(make_edge(face[i], face[(i + 1) % face.size()]));
            if (it != index.end()) out[static_cast<std::size_t>(it->second)].push_back(static_cast<int>(f));
        }
    }
    return out;
}

std::vector<std::string> PolyhedralGraph::problems() const {
    std::vector<std::string> out;
    std::set<Edge> seen;
    const int n = static_cast<int>(vertices.size());
    for (const auto& e : edges) {
        std::ostringstream os;
        if (e[0] == e[1]) {
            os << "self-loop at " << e[0];
        } else if (e[0] < 0 || e[1] >= n || e[0] > e[1]) {
            os << "malformed edge " << e[0] << "-" << e[1];
        } else if (!seen.insert(e).second) {
            os << "duplicate edge " << e[0] << "-" << e[1];
        }
        if (!os.str().empty()) out.push_back(os.str());
    }
    if (faces.empty()) return out;
    for (std::size_t f = 0; f < faces.size(); ++f) {
        const auto& face = faces[f];
        for (std::size_t i = 0; i < face.size(); ++i) {
            if (!seen.count(make_edge(face[i], face[(i + 1) % face.size()]))) {
                out.push_back("face " + std::to_string(f) + " leaves the edge set");
                break;
            }
        }
    }
    const auto ef = edge_faces();
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (ef[i].size() != 2)
            out.push_back("edge " + std::to_string(edges[i][0]) + "-" + std::to_string(edges[i][1]) + " lies on " +
                          std::to_string(ef[i].size()) + " faces");
    return out;
}

PolyhedralGraph polyhedron_from_embedding(std::vector<Point3> vertices, std::vector<Edge> edges) {
    PolyhedralGraph g{std::move(vertices), std::move(edges), {}};
    for (auto& e : g.edges) e = make_edge(e[0], e[1]);
    std::sort(g.edges.begin(), g.edges.end());
    trace_faces(g);
    return g;
}

PolyhedralGraph polyhedron_from_embedding(std::vector<Point3> vertices) {
    auto edges = shortest_pairs(vertices);
    return polyhedron_from_embedding(std::move(vertices), std::move(edges));
}

PolyhedralGraph build_icosahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point3> pts;
    add_cyclic_signed(pts, 0.0, 1.0, phi);
    return polyhedron_from_embedding(std::move(pts));
}

PolyhedralGraph build_truncated_icosahedron() {
    const auto ico = build_icosahedron();
    std::vector<Point3> pts;
    for (const auto& e : ico.edges) {
        const auto& a = ico.vertices[static_cast<std::size_t>(e[0])];
        const auto& b = ico.vertices[static_cast<std::size_t>(e[1])];
        for (double t : {1.0 / 3.0, 2.0 / 3.0}) pts.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]),
                                                               a[2] + t * (b[2] - a[2])});
    }
    return polyhedron_from_embedding(std::move(pts));
}

PolyhedralGraph build_cube() {
    std::vector<Point3> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    return polyhedron_from_embedding(std::move(pts));
}

PolyhedralGraph build_dodecahedron() {
    const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
    std::vector<Point3> pts;
    for (int i = 0; i < 8; ++i) pts.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
    add_cyclic_signed(pts, 0.0, 1.0 / phi, phi);
    return polyhedron_from_embedding(std::move(pts));
}

PolyhedralGraph build_cycle(int n) {
    if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
    PolyhedralGraph g;
    for (int i = 0; i < n; ++i) {
        const double a = 2.0 * std::numbers::pi * i / n;
        g.vertices.push_back({std::cos(a), std::sin(a), 0.0});
        g.edges.push_back(make_edge(i, (i + 1) % n));
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

PolyhedralGraph build_path(int n) {
    if (n < 1) throw DomainError("a path needs at least one vertex");
    PolyhedralGraph g;
    for (int i = 0; i < n; ++i) {
        g.vertices.push_back({static_cast<double>(i), 0.0, 0.0});
        if (i > 0) g.edges.push_back({i - 1, i});
    }
    return g;
}

int euler_check(const PolyhedralGraph& g) {
    return static_cast<int>(g.vertex_count()) - static_cast<int>(g.edge_count()) + static_cast<int>(g.face_count());
}

Census census(const PolyhedralGraph& g) {
    Census c{g.vertex_count(), g.edge_count(), g.face_count(), 0, 0, 0, 0, 0, 0, true};
    for (const auto& f : g.faces) {
        if (f.size() == 5) ++c.pentagons;
        else if (f.size() == 6) ++c.hexagons;
        else ++c.other_faces;
    }
    const auto ef = g.edge_faces();
    for (const auto& faces : ef) {
        if (faces.size() != 2) continue;
        const auto a = g.faces[static_cast<std::size_t>(faces[0])].size();
        const auto b = g.faces[static_cast<std::size_t>(faces[1])].size();
        if (a == 5 && b == 5) ++c.pent_pent_edges;
        else if (a == 6 && b == 6) ++c.hex_hex_edges;
        else if (a + b == 11) ++c.pent_hex_edges;
    }
    for (const auto& nbrs : g.adjacency()) c.cubic = c.cubic && nbrs.size() == 3;
    return c;
}

IsolatedPentagonResult isolated_pentagon_check(const PolyhedralGraph& g) {
    const auto ef = g.edge_faces();
    for (const auto& faces : ef) {
        if (faces.size() != 2) continue;
        if (g.faces[static_cast<std::size_t>(faces[0])].size() == 5 &&
            g.faces[static_cast<std::size_t>(faces[1])].size() == 5)
            return {false, std::pair{faces[0], faces[1]}};
    }
    return {true, std::nullopt};
}

PolyhedralGraph stone_wales_rotate(const PolyhedralGraph& g, int u, int v) {
    const int e = g.edge_index(u, v);
    if (e < 0) throw DomainError("Stone-Wales rotation needs an existing edge");
    const auto ef = g.edge_faces();
    if (ef[static_cast<std::size_t>(e)].size() != 2) throw DomainError("edge must lie on two faces");
    const auto adj = g.adjacency();
    if (adj[static_cast<std::size_t>(u)].size() != 3 || adj[static_cast<std::size_t>(v)].size() != 3)
        throw DomainError("Stone-Wales rotation needs degree-3 endpoints");

    PolyhedralGraph out = g;
    const int fa = ef[static_cast<std::size_t>(e)][0];
    const int fb = ef[static_cast<std::size_t>(e)][1];
    // Neighbour of x in face f other than y.
    auto other = [&](int f, int x, int y) {
        const auto& face = g.faces[static_cast<std::size_t>(f)];
        const auto n = face.size();
        const auto i = static_cast<std::size_t>(std::find(face.begin(), face.end(), x) - face.begin());
        const int prev = face[(i + n - 1) % n], next = face[(i + 1) % n];
        return prev == y ? next : prev;
    };
    const int a1 = other(fa, u, v), b1 = other(fa, v, u);
    const int a2 = other(fb, u, v), b2 = other(fb, v, u);

    // Third faces at u and v.
    auto third_face = [&](int x, int p, int q) {
        for (std::size_t f = 0; f < g.faces.size(); ++f) {
            const auto& face = g.faces[f];
            if (std::find(face.begin(), face.end(), x) != face.end() &&
                std::find(face.begin(), face.end(), p) != face.end() &&
                std::find(face.begin(), face.end(), q) != face.end() && static_cast<int>(f) != fa &&
                static_cast<int>(f) != fb)
                return static_cast<int>(f);
        }
        throw DomainError("could not locate the faces around the rotated edge");
    };
    const int fc = third_face(u, a1, a2);
    const int fd = third_face(v, b1, b2);

    auto erase_vertex = [](Face& face, int x) { face.erase(std::find(face.begin(), face.end(), x)); };
    // Insert y between adjacent x and z.
    auto insert_between = [](Face& face, int x, int z, int y) {
        const auto n = face.size();
        for (std::size_t i = 0; i < n; ++i) {
            const int p = face[i], q = face[(i + 1) % n];
            if ((p == x && q == z) || (p == z && q == x)) {
                face.insert(face.begin() + static_cast<long>(i + 1), y);
                return;
            }
        }
        throw DomainError("face does not contain the expected edge");
    };
    erase_vertex(out.faces[static_cast<std::size_t>(fa)], v);
    erase_vertex(out.faces[static_cast<std::size_t>(fb)], u);
    insert_between(out.faces[static_cast<std::size_t>(fc)], u, a2, v);
    insert_between(out.faces[static_cast<std::size_t>(fd)], v, b1, u);

    auto drop = [&](int x, int y) { out.edges.erase(std::find(out.edges.begin(), out.edges.end(), make_edge(x, y))); };
    drop(u, a2);
    drop(v, b1);
    out.edges.push_back(make_edge(u, b1));
    out.edges.push_back(make_edge(v, a2));
    std::sort(out.edges.begin(), out.edges.end());

    // Quarter turn of the bond about its midpoint, keeping u on the b1 side.
    const auto& pu = g.vertices[static_cast<std::size_t>(u)];
    const auto& pv = g.vertices[static_cast<std::size_t>(v)];
    Point3 mid, half;
    for (int i = 0; i < 3; ++i) {
        mid[static_cast<std::size_t>(i)] = 0.5 * (pu[static_cast<std::size_t>(i)] + pv[static_cast<std::size_t>(i)]);
        half[static_cast<std::size_t>(i)] = 0.5 * (pv[static_cast<std::size_t>(i)] - pu[static_cast<std::size_t>(i)]);
    }
    const Point3 c = centroid(g.vertices);
    Point3 axis = sub(mid, c);
    const double len = std::sqrt(dot(axis, axis));
    for (double& x : axis) x /= len;
    const Point3 turned = cross(axis, half);
    Point3 nu, nv;
    for (std::size_t i = 0; i < 3; ++i) {
        nu[i] = mid[i] - turned[i];
        nv[i] = mid[i] + turned[i];
    }
    if (dist(nu, g.vertices[static_cast<std::size_t>(b1)]) > dist(nv, g.vertices[static_cast<std::size_t>(b1)]))
        std::swap(nu, nv);
    out.vertices[static_cast<std::size_t>(u)] = nu;
    out.vertices[static_cast<std::size_t>(v)] = nv;
    return out;
}

double centroid_distance_spread(const PolyhedralGraph& g) {
    if (g.vertices.empty()) return 0.0;
    const Point3 c = centroid(g.vertices);
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
    for (const auto& p : g.vertices) {
        const double d = dist(p, c);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return hi - lo;
}

}  // namespace symmetria::fullerene

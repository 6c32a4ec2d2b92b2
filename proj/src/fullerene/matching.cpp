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

#include "symmetria/fullerene/matching.hpp"

#include <algorithm>
#include <queue>

#include "symmetria/errors.hpp"

namespace symmetria::fullerene {

std::size_t BondAssignment::double_count() const {
    return static_cast<std::size_t>(std::count(bonds.begin(), bonds.end(), Bond::double_bond));
}

namespace {

/// Edmonds' blossom algorithm, O(V³).
class Blossom {
public:
    Blossom(int n, const std::vector<Edge>& edges)
        : n_(n), adj_(static_cast<std::size_t>(n)), mate_(static_cast<std::size_t>(n), -1) {
        for (const auto& e : edges) {
            adj_[static_cast<std::size_t>(e[0])].push_back(e[1]);
            adj_[static_cast<std::size_t>(e[1])].push_back(e[0]);
        }
    }

    std::vector<int> run() {
        for (int v = 0; v < n_; ++v)
            if (mate_[idx(v)] == -1) augment_from(v);
        return mate_;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b) {
        std::vector<bool> seen(idx(n_), false);
        for (;;) {
            a = base_[idx(a)];
            seen[idx(a)] = true;
            if (mate_[idx(a)] == -1) break;
            a = parent_[idx(mate_[idx(a)])];
        }
        for (;;) {
            b = base_[idx(b)];
            if (seen[idx(b)]) return b;
            b = parent_[idx(mate_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = in_blossom_[idx(base_[idx(mate_[idx(v)])])] = true;
            parent_[idx(v)] = child;
            child = mate_[idx(v)];
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    void augment_from(int root) {
        used_.assign(idx(n_), false);
        parent_.assign(idx(n_), -1);
        base_.resize(idx(n_));
        for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
        used_[idx(root)] = true;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj_[idx(v)]) {
                if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
                if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
                    const int b = lca(v, to);
                    in_blossom_.assign(idx(n_), false);
                    mark_path(v, b, to);
                    mark_path(to, b, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[idx(base_[idx(i)])]) continue;
                        base_[idx(i)] = b;
                        if (!used_[idx(i)]) {
                            used_[idx(i)] = true;
                            q.push(i);
                        }
                    }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (mate_[idx(to)] == -1) {
                        // Flip the alternating path ending at `to`.
                        for (int x = to; x != -1;) {
                            const int pv = parent_[idx(x)];
                            const int next = mate_[idx(pv)];
                            mate_[idx(x)] = pv;
                            mate_[idx(pv)] = x;
                            x = next;
                        }
                        return;
                    }
                    used_[idx(mate_[idx(to)])] = true;
                    q.push(mate_[idx(to)]);
                }
            }
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> mate_, parent_, base_;
    std::vector<bool> used_, in_blossom_;
};

bool is_perfect(const PolyhedralGraph& g, const std::vector<Bond>& bonds) {
    std::vector<int> hits(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (bonds[i] == Bond::double_bond)
            for (int v : g.edges[i]) ++hits[static_cast<std::size_t>(v)];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace

std::vector<int> maximum_matching(int vertex_count, const std::vector<Edge>& edges) {
    return Blossom(vertex_count, edges).run();
}

BondAssignment kekule(const PolyhedralGraph& g) {
    const int n = static_cast<int>(g.vertex_count());
    if (n % 2 != 0) {
        std::vector<int> all(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
        throw InfeasibleError("odd vertex count admits no perfect matching", std::move(all));
    }
    BondAssignment out{std::vector<Bond>(g.edge_count(), Bond::single), false};

    if (!g.faces.empty()) {
        const auto ef = g.edge_faces();
        for (std::size_t i = 0; i < ef.size(); ++i)
            if (ef[i].size() == 2 && g.faces[static_cast<std::size_t>(ef[i][0])].size() == 6 &&
                g.faces[static_cast<std::size_t>(ef[i][1])].size() == 6)
                out.bonds[i] = Bond::double_bond;
        if (is_perfect(g, out.bonds)) {
            out.canonical = true;
            return out;
        }
        std::fill(out.bonds.begin(), out.bonds.end(), Bond::single);
    }

    const auto mate = maximum_matching(n, g.edges);
    std::vector<int> uncovered;
    for (int v = 0; v < n; ++v)
        if (mate[static_cast<std::size_t>(v)] == -1) uncovered.push_back(v);
    if (!uncovered.empty()) throw InfeasibleError("graph has no perfect matching", std::move(uncovered));
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (mate[static_cast<std::size_t>(g.edges[i][0])] == g.edges[i][1]) out.bonds[i] = Bond::double_bond;
    return out;
}

std::vector<int> bond_violations(const PolyhedralGraph& g, const BondAssignment& a) {
    if (a.bonds.size() != g.edge_count()) throw DimensionError("bond assignment does not match the edge list");
    std::vector<int> hits(g.vertex_count(), 0);
    for (std::size_t i = 0; i < g.edges.size(); ++i)
        if (a.bonds[i] == Bond::double_bond)
            for (int v : g.edges[i]) ++hits[static_cast<std::size_t>(v)];
    std::vector<int> bad;
    for (std::size_t v = 0; v < hits.size(); ++v)
        if (hits[v] != 1) bad.push_back(static_cast<int>(v));
    return bad;
}

}  // namespace symmetria::fullerene

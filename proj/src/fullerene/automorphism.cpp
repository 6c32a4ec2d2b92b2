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

#include "symmetria/fullerene/automorphism.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "symmetria/errors.hpp"

namespace symmetria::fullerene {

namespace {

/// Degree followed by the sorted sizes of incident faces.
std::vector<std::vector<int>> signatures(const PolyhedralGraph& g, bool with_faces) {
    const auto adj = g.adjacency();
    std::vector<std::vector<int>> sig(g.vertex_count());
    for (std::size_t v = 0; v < sig.size(); ++v) sig[v].push_back(static_cast<int>(adj[v].size()));
    if (with_faces) {
        std::vector<std::vector<int>> sizes(g.vertex_count());
        for (const auto& f : g.faces)
            for (int v : f) sizes[static_cast<std::size_t>(v)].push_back(static_cast<int>(f.size()));
        for (std::size_t v = 0; v < sig.size(); ++v) {
            std::sort(sizes[v].begin(), sizes[v].end());
            sig[v].insert(sig[v].end(), sizes[v].begin(), sizes[v].end());
        }
    }
    return sig;
}

class Matcher {
public:
    Matcher(const PolyhedralGraph& a, const PolyhedralGraph& b, bool refine,
            const std::function<bool(const Permutation&)>& visit)
        : adj_a_(a.adjacency()), adj_b_(b.adjacency()), visit_(visit) {
        const bool faces = refine && !a.faces.empty() && !b.faces.empty();
        sig_a_ = signatures(a, faces);
        sig_b_ = signatures(b, faces);
        bfs_order();
    }

    void run() {
        if (adj_a_.size() != adj_b_.size() || adj_a_.empty()) return;
        image_.assign(adj_a_.size(), -1);
        used_.assign(adj_b_.size(), false);
        extend(0);
    }

private:
    void bfs_order() {
        const std::size_t n = adj_a_.size();
        parent_.assign(n, -1);
        if (n == 0) return;
        std::vector<bool> seen(n, false);
        std::queue<int> q;
        q.push(0);
        seen[0] = true;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            order_.push_back(v);
            for (int w : adj_a_[static_cast<std::size_t>(v)]) {
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                parent_[static_cast<std::size_t>(w)] = v;
                q.push(w);
            }
        }
        if (order_.size() != n) throw DomainError("automorphism search needs a connected graph");
    }

    bool consistent(int w, int target) const {
        const auto uw = static_cast<std::size_t>(w);
        const auto ut = static_cast<std::size_t>(target);
        if (used_[ut] || sig_a_[uw] != sig_b_[ut]) return false;
        int mapped_a = 0;
        for (int x : adj_a_[uw]) {
            const int ix = image_[static_cast<std::size_t>(x)];
            if (ix < 0) continue;
            ++mapped_a;
            if (!std::binary_search(adj_b_[ut].begin(), adj_b_[ut].end(), ix)) return false;
        }
        int mapped_b = 0;
        for (int y : adj_b_[ut]) mapped_b += used_[static_cast<std::size_t>(y)] ? 1 : 0;
        return mapped_a == mapped_b;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return visit_(image_);
        const int w = order_[k];
        const int p = parent_[static_cast<std::size_t>(w)];
        std::vector<int> candidates;
        if (p < 0) {
            for (std::size_t t = 0; t < adj_b_.size(); ++t) candidates.push_back(static_cast<int>(t));
        } else {
            candidates = adj_b_[static_cast<std::size_t>(image_[static_cast<std::size_t>(p)])];
        }
        for (int t : candidates) {
            if (!consistent(w, t)) continue;
            image_[static_cast<std::size_t>(w)] = t;
            used_[static_cast<std::size_t>(t)] = true;
            const bool keep_going = extend(k + 1);
            used_[static_cast<std::size_t>(t)] = false;
            image_[static_cast<std::size_t>(w)] = -1;
            if (!keep_going) return false;
        }
        return true;
    }

    std::vector<std::vector<int>> adj_a_, adj_b_, sig_a_, sig_b_;
    std::vector<int> order_, parent_, image_;
    std::vector<bool> used_;
    const std::function<bool(const Permutation&)>& visit_;
};

}  // namespace

void for_each_isomorphism(const PolyhedralGraph& a, const PolyhedralGraph& b,
                          const std::function<bool(const Permutation&)>& visit, bool face_refinement) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return;
    Matcher(a, b, face_refinement, visit).run();
}

void for_each_automorphism(const PolyhedralGraph& g, const std::function<bool(const Permutation&)>& visit,
                           bool face_refinement) {
    for_each_isomorphism(g, g, visit, face_refinement);
}

std::uint64_t automorphism_order(const PolyhedralGraph& g, bool face_refinement) {
    std::uint64_t count = 0;
    for_each_automorphism(g, [&](const Permutation&) { ++count; return true; }, face_refinement);
    return count;
}

bool isomorphic(const PolyhedralGraph& a, const PolyhedralGraph& b) {
    bool found = false;
    for_each_isomorphism(a, b, [&](const Permutation&) { found = true; return false; });
    return found;
}

bool preserves_faces(const PolyhedralGraph& g, const Permutation& p) {
    std::set<std::vector<int>> faces;
    for (auto f : g.faces) {
        std::sort(f.begin(), f.end());
        faces.insert(f);
    }
    for (const auto& f : g.faces) {
        std::vector<int> mapped;
        for (int v : f) mapped.push_back(p.at(static_cast<std::size_t>(v)));
        std::sort(mapped.begin(), mapped.end());
        if (!faces.count(mapped)) return false;
    }
    return true;
}

}  // namespace symmetria::fullerene

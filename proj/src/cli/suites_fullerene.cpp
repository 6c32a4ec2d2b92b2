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

#include <cmath>
#include <cstdlib>

#include "symmetria/cli/suites.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/fullerene/automorphism.hpp"
#include "symmetria/fullerene/graph.hpp"
#include "symmetria/fullerene/matching.hpp"

namespace symmetria::cli {

namespace {

using namespace fullerene;

// First edge shared by two hexagons, the one a Stone-Wales turn acts on.
std::pair<int, int> first_hex_hex_edge(const PolyhedralGraph& g) {
    const auto ef = g.edge_faces();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        if (ef[i].size() == 2 && g.faces[ef[i][0]].size() == 6 && g.faces[ef[i][1]].size() == 6)
            return {g.edges[i][0], g.edges[i][1]};
    }
    throw DomainError("graph has no hexagon-hexagon edge");
}

}  // namespace

void run_fullerene(SuiteContext& ctx) {
    const std::string ref_census = "\"60 vertices and 32 faces, 12 of which are pentagonal and 20 hexagonal\"";
    const std::string ref_bonds = "\"two single bonds and one double bond\"";
    const std::string ref_ipr = "\"pentagon is completely surrounded by hexagons is stable\"";
    const std::string ref_sym = "\"It has t-icosahedral symmetry\"";
    const std::string ref_shape = "\"suggested a truncated icosahedron\"";

    const PolyhedralGraph g = build_truncated_icosahedron();
    const Census c = census(g);

    ctx.check("face_census", ref_census, [&] {
        const auto diff = [](std::size_t have, long want) { return std::abs(static_cast<long>(have) - want); };
        const double off = static_cast<double>(diff(c.vertices, 60) + diff(c.edges, 90) + diff(c.faces, 32) +
                                               diff(c.pentagons, 12) + diff(c.hexagons, 20) + diff(c.other_faces, 0));
        Json d{{"V", c.vertices}, {"E", c.edges}, {"F", c.faces}, {"pentagons", c.pentagons}, {"hexagons", c.hexagons}};
        return ctx.exact(off, 1, d);
    });

    ctx.check("euler_characteristic", ref_shape, [&] {
        const int chi = euler_check(g);
        return ctx.exact(std::abs(chi - 2), 1, Json{{"chi", chi}});
    });

    ctx.check("vertex_degrees", ref_bonds, [&] {
        const auto adj = g.adjacency();
        int wrong = 0;
        for (const auto& nb : adj) wrong += nb.size() != 3;
        return ctx.exact(wrong, static_cast<std::int64_t>(adj.size()));
    });

    ctx.check("edge_partition", ref_census, [&] {
        const double off = std::abs(static_cast<double>(c.pent_hex_edges) - 60.0) +
                           std::abs(static_cast<double>(c.hex_hex_edges) - 30.0) +
                           static_cast<double>(c.pent_pent_edges);
        Json d{{"pentagon_hexagon", c.pent_hex_edges}, {"hexagon_hexagon", c.hex_hex_edges}, {"pentagon_pentagon", c.pent_pent_edges}};
        return ctx.exact(off, 1, d);
    });

    ctx.check("graph_well_formed", ref_shape, [&] {
        const auto problems = g.problems();
        Json d = Json::object();
        if (!problems.empty()) d["first_problem"] = problems.front();
        return ctx.exact(static_cast<double>(problems.size()), 1, d);
    });

    ctx.check("vertices_on_common_sphere", ref_shape, [&] {
        return ctx.within(centroid_distance_spread(g), 1e-9, static_cast<std::int64_t>(g.vertex_count()));
    });

    ctx.check("isolated_pentagon_rule", ref_ipr, [&] {
        const auto r = isolated_pentagon_check(g);
        return ctx.exact(r.isolated ? 0.0 : 1.0);
    });

    ctx.check("kekule_structure", ref_bonds, [&] {
        const BondAssignment a = kekule(g);
        const auto violations = bond_violations(g, a);
        const auto ef = g.edge_faces();
        int off_hex = 0;
        for (std::size_t i = 0; i < g.edges.size(); ++i) {
            if (a.bonds[i] != Bond::double_bond) continue;
            off_hex += !(g.faces[ef[i][0]].size() == 6 && g.faces[ef[i][1]].size() == 6);
        }
        const double off = static_cast<double>(violations.size()) +
                           std::abs(static_cast<double>(a.double_count()) - 30.0) + off_hex;
        Json d{{"double_bonds", a.double_count()}, {"canonical", a.canonical}, {"off_hexagon_pairs", off_hex}};
        return ctx.exact(off, static_cast<std::int64_t>(g.vertex_count()), d);
    });

    ctx.check("automorphism_order", ref_sym, [&] {
        const auto order = automorphism_order(g);
        return ctx.exact(std::abs(static_cast<double>(order) - 120.0), 1, Json{{"order", order}});
    });

    ctx.check("automorphisms_preserve_faces", ref_sym, [&] {
        int seen = 0, broken = 0;
        for_each_automorphism(g, [&](const Permutation& p) {
            ++seen;
            broken += !preserves_faces(g, p);
            return true;
        });
        return ctx.exact(broken, seen);
    });

    ctx.check("mutation_merged_pentagons_detected", ref_ipr, [&] {
        const auto [u, v] = first_hex_hex_edge(g);
        const PolyhedralGraph mutated = stone_wales_rotate(g, u, v);
        const auto r = isolated_pentagon_check(mutated);
        Json d = Json::object();
        if (r.witness) d["witness_faces"] = {r.witness->first, r.witness->second};
        return ctx.at_least(r.isolated ? 0.0 : 1.0, 1.0, 1, d);
    });

    ctx.check("mutation_deleted_face_detected", ref_shape, [&] {
        PolyhedralGraph mutated = g;
        mutated.faces.pop_back();
        const int chi = euler_check(mutated);
        return ctx.at_least(std::abs(chi - 2), 1.0, 1, Json{{"chi", chi}});
    });

    ctx.check("odd_vertex_count_has_no_kekule_structure", ref_bonds, [&] {
        int accepted = 0;
        try {
            (void)kekule(build_cycle(5));
            accepted = 1;
        } catch (const InfeasibleError&) {
        }
        return ctx.exact(accepted);
    });
}

}  // namespace symmetria::cli

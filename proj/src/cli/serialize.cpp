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

#include "symmetria/cli/serialize.hpp"

#include <fstream>

#include "symmetria/errors.hpp"

namespace symmetria::cli {

namespace {

Json rational_to_json(const liealg::Rational& r) {
    if (denominator(r) == 1) return static_cast<long long>(numerator(r));
    return r.str();
}

Json vec_json(const spacetime::Vec3& v) { return Json::array({v.x(), v.y(), v.z()}); }

Json mat_json(const spacetime::Mat3& m) {
    Json rows = Json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(Json::array({m(i, 0), m(i, 1), m(i, 2)}));
    return rows;
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParameterError(std::string("missing field '") + key + "'");
    return j.at(key);
}

double number(const Json& j) {
    if (!j.is_number()) throw ParameterError("expected a number");
    return j.get<double>();
}

spacetime::Vec3 vec_from(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParameterError("expected a 3-vector");
    return {number(j[0]), number(j[1]), number(j[2])};
}

spacetime::Mat3 mat_from(const Json& j) {
    if (!j.is_array() || j.size() != 3) throw ParameterError("expected a 3x3 matrix");
    spacetime::Mat3 m;
    for (int i = 0; i < 3; ++i) m.row(i) = vec_from(j[i]).transpose();
    return m;
}

}  // namespace

Json algebra_to_json(const liealg::LieStructure& s) {
    const auto& labels = s.basis_labels();
    Json brackets = Json::array();
    for (std::size_t a = 0; a < s.dimension(); ++a) {
        for (std::size_t b = a + 1; b < s.dimension(); ++b) {
            const auto terms = s.bracket(a, b);
            if (terms.empty()) continue;
            Json out = Json::array();
            for (const auto& [gen, coeff] : terms) out.push_back({{"gen", labels[gen]}, {"coeff", rational_to_json(coeff)}});
            brackets.push_back({{"a", labels[a]}, {"b", labels[b]}, {"out", out}});
        }
    }
    return {{"name", s.name()}, {"basis", labels}, {"brackets", brackets}};
}

Json graph_to_json(const fullerene::PolyhedralGraph& g, const fullerene::BondAssignment& bonds) {
    Json bond_map = Json::object();
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        bond_map[std::to_string(e[0]) + "-" + std::to_string(e[1])] =
            bonds.bonds.at(i) == fullerene::Bond::double_bond ? "double" : "single";
    }
    return {{"vertices", g.vertices}, {"edges", g.edges}, {"faces", g.faces}, {"bonds", bond_map}};
}

Json sweep_to_json(const std::vector<SweepRecord>& sweep) {
    Json out = Json::array();
    for (const auto& r : sweep) out.push_back({{"label", r.label}, {"u", r.u}, {"v", r.v}, {"residual", r.residual}});
    return out;
}

Json element_to_json(const spacetime::GalileiElement& g) {
    return {{"galilei", {{"R", mat_json(g.R())}, {"v", vec_json(g.v())}, {"xi", vec_json(g.xi())}, {"tau", g.tau()}}}};
}

Json element_to_json(const spacetime::PoincareElement& p) {
    return {{"poincare", {{"a", vec_json(p.a())}, {"b", p.b()}, {"v", vec_json(p.v())}, {"R", mat_json(p.R())}}}};
}

spacetime::GalileiElement galilei_from_json(const Json& j) {
    const Json& g = field(j, "galilei");
    try {
        return {mat_from(field(g, "R")), vec_from(field(g, "v")), vec_from(field(g, "xi")), number(field(g, "tau"))};
    } catch (const DomainError& e) {
        throw ParameterError(e.what());
    }
}

spacetime::PoincareElement poincare_from_json(const Json& j) {
    const Json& p = field(j, "poincare");
    try {
        return {vec_from(field(p, "a")), number(field(p, "b")), vec_from(field(p, "v")), mat_from(field(p, "R"))};
    } catch (const DomainError& e) {
        throw ParameterError(e.what());
    }
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    out << contents;
    out.flush();
    if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace symmetria::cli

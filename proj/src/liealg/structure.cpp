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

#include "symmetria/liealg/structure.hpp"

#include <stdexcept>

#include "symmetria/errors.hpp"

namespace symmetria::liealg {

LieStructure::LieStructure(std::string name, std::vector<std::string> basis_labels)
    : name_(std::move(name)), labels_(std::move(basis_labels)),
      constants_(labels_.size() * labels_.size() * labels_.size()) {}

std::size_t LieStructure::index_of(const std::string& label) const {
    for (std::size_t i = 0; i < labels_.size(); ++i)
        if (labels_[i] == label) return i;
    throw DomainError("unknown generator " + label);
}

void LieStructure::set_bracket(std::size_t a, std::size_t b,
                               const std::vector<std::pair<std::size_t, Rational>>& out) {
    for (std::size_t e = 0; e < dimension(); ++e) {
        set_constant(a, b, e, 0);
        set_constant(b, a, e, 0);
    }
    for (const auto& [gen, coeff] : out) {
        set_constant(a, b, gen, constant(a, b, gen) + coeff);
        set_constant(b, a, gen, constant(b, a, gen) - coeff);
    }
}

std::vector<std::pair<std::size_t, Rational>> LieStructure::bracket(std::size_t a, std::size_t b) const {
    std::vector<std::pair<std::size_t, Rational>> out;
    for (std::size_t e = 0; e < dimension(); ++e)
        if (constant(a, b, e) != 0) out.emplace_back(e, constant(a, b, e));
    return out;
}

int levi_civita(int i, int j, int k) {
    if (i == j || j == k || i == k) return 0;
    return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

namespace {

// Offsets of the three vector triplets and the scalar inside the 10-element basis.
constexpr std::size_t kRot = 0;
constexpr std::size_t kMom = 3;
constexpr std::size_t kBoost = 6;
constexpr std::size_t kTime = 9;

std::vector<std::string> labels(const char* rot, const char* boost) {
    std::vector<std::string> out;
    for (const char* prefix : {rot, "P", boost})
        for (int i = 1; i <= 3; ++i) out.push_back(std::string(prefix) + std::to_string(i));
    out.emplace_back("H");
    return out;
}

/// {X_α, Y_β} = ε_αβγ Z_γ for the triplets at the given offsets.
void set_epsilon(LieStructure& s, std::size_t x, std::size_t y, std::size_t z, int sign) {
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
            std::vector<std::pair<std::size_t, Rational>> out;
            for (int g = 0; g < 3; ++g) {
                const int eps = levi_civita(a, b, g);
                if (eps != 0) out.emplace_back(z + static_cast<std::size_t>(g), Rational(sign * eps));
            }
            s.set_bracket(x + static_cast<std::size_t>(a), y + static_cast<std::size_t>(b), out);
        }
}

}  // namespace

LieStructure galilei_algebra() {
    LieStructure s("galilei", labels("M", "G"));
    set_epsilon(s, kRot, kRot, kRot, 1);    // {M_α, M_β} = ε M_γ
    set_epsilon(s, kRot, kMom, kMom, 1);    // {M_α, P_β} = ε P_γ
    set_epsilon(s, kRot, kBoost, kBoost, 1);  // {M_α, G_β} = ε G_γ
    for (std::size_t a = 0; a < 3; ++a)     // {H, G_α} = −P_α
        s.set_bracket(kTime, kBoost + a, {{kMom + a, Rational(-1)}});
    // {M,H}, {P,G}, {G,G}, {P,P}, {P,H} vanish: already zero.
    return s;
}

LieStructure poincare_algebra() {
    LieStructure s("poincare", labels("J", "K"));
    for (std::size_t j = 0; j < 3; ++j) {
        s.set_bracket(kBoost + j, kMom + j, {{kTime, Rational(1)}});  // {K_j, P_k} = δ_jk H
        s.set_bracket(kBoost + j, kTime, {{kMom + j, Rational(1)}});  // {K_j, H} = P_j
    }
    set_epsilon(s, kRot, kMom, kMom, 1);       // {J_j, P_k} = ε P_l
    set_epsilon(s, kBoost, kBoost, kRot, -1);  // {K_j, K_k} = −ε J_l
    set_epsilon(s, kRot, kBoost, kBoost, 1);   // {J_j, K_k} = ε K_l
    set_epsilon(s, kRot, kRot, kRot, 1);       // {J_j, J_k} = ε J_l
    return s;
}

StructureCheck check_structure(const LieStructure& s) {
    StructureCheck report;
    const std::size_t n = s.dimension();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t e = 0; e < n; ++e) {
                Rational sum = s.constant(a, b, e) + s.constant(b, a, e);
                if (sum != 0) report.antisymmetry.push_back({a, b, e, e, sum});
            }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t e = b + 1; e < n; ++e)
                for (std::size_t f = 0; f < n; ++f) {
                    Rational sum = 0;
                    for (std::size_t d = 0; d < n; ++d) {
                        sum += s.constant(a, b, d) * s.constant(d, e, f);
                        sum += s.constant(b, e, d) * s.constant(d, a, f);
                        sum += s.constant(e, a, d) * s.constant(d, b, f);
                    }
                    if (sum != 0) report.jacobi.push_back({a, b, e, f, sum});
                }
    return report;
}

}  // namespace symmetria::liealg

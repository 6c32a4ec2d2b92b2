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

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symmetria/liealg/polynomial.hpp"

namespace symmetria::liealg {

/// Exact structure constants {X_a, X_b} = Σ_e c[a][b][e] X_e over a labelled basis.
class LieStructure {
public:
    LieStructure(std::string name, std::vector<std::string> basis_labels);

    const std::string& name() const noexcept { return name_; }
    const std::vector<std::string>& basis_labels() const noexcept { return labels_; }
    std::size_t dimension() const noexcept { return labels_.size(); }

    std::size_t index_of(const std::string& label) const;

    const Rational& constant(std::size_t a, std::size_t b, std::size_t e) const {
        return constants_[(a * dimension() + b) * dimension() + e];
    }
    void set_constant(std::size_t a, std::size_t b, std::size_t e, const Rational& value) {
        constants_[(a * dimension() + b) * dimension() + e] = value;
    }

    /// Sets {X_a, X_b} = Σ coeff·X_gen and the antisymmetric partner {X_b, X_a}.
    void set_bracket(std::size_t a, std::size_t b,
                     const std::vector<std::pair<std::size_t, Rational>>& out);

    /// Nonzero terms of {X_a, X_b}.
    std::vector<std::pair<std::size_t, Rational>> bracket(std::size_t a, std::size_t b) const;

private:
    std::string name_;
    std::vector<std::string> labels_;
    std::vector<Rational> constants_;
};

/// Levi-Civita symbol on indices 0..2 with ε₀₁₂ = +1.
int levi_civita(int i, int j, int k);

/// Basis (M₁..M₃, P₁..P₃, G₁..G₃, H) with the Galilei bracket table.
LieStructure galilei_algebra();

/// Basis (J₁..J₃, P₁..P₃, K₁..K₃, H) with the Poincaré bracket table.
LieStructure poincare_algebra();

struct StructureDefect {
    std::size_t a;
    std::size_t b;
    std::size_t e;
    std::size_t component;  // output generator; equals `e` for antisymmetry entries
    Rational defect;
};

struct StructureCheck {
    std::vector<StructureDefect> antisymmetry;
    std::vector<StructureDefect> jacobi;
    bool passed() const noexcept { return antisymmetry.empty() && jacobi.empty(); }
};

/// Exact antisymmetry and Jacobi-identity audit; every violating triple is listed.
StructureCheck check_structure(const LieStructure& structure);

using Realization = std::map<std::string, PhasePolynomial>;

/// P_j = p_j, H = p₀, J_j = ε_jkl x^k p_l, K_j = p₀x^j + x⁰p_j.
Realization poincare_realization();

/// P_α = p_α, H = p₀, M_α = ε_αβγ x^β p_γ, G_α = x⁰p_α.
Realization galilei_realization();

struct RealizationMismatch {
    std::size_t a;
    std::size_t b;
    PhasePolynomial difference;  // {X_a, X_b} − Σ c[a][b][e] X_e
};

struct RealizationCheck {
    std::size_t pairs_checked = 0;
    std::vector<RealizationMismatch> mismatches;
    bool passed() const noexcept { return mismatches.empty(); }
};

/// Compares Poisson brackets of the assigned polynomials against the table for
/// every pair a < b. Throws CompletenessError when a generator is unassigned.
RealizationCheck verify_realization(const LieStructure& structure, const Realization& realization);

}  // namespace symmetria::liealg

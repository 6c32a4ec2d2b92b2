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

#include "symmetria/errors.hpp"
#include "symmetria/liealg/structure.hpp"

namespace symmetria::liealg {

PhasePolynomial poisson_bracket(const PhasePolynomial& f, const PhasePolynomial& g) {
    PhasePolynomial out;
    for (std::size_t mu = 0; mu < 4; ++mu) {
        const std::size_t x = mu;
        const std::size_t p = mu + 4;
        out += f.derivative(x) * g.derivative(p);
        out -= f.derivative(p) * g.derivative(x);
    }
    return out;
}

namespace {

PhasePolynomial var(std::size_t v) { return PhasePolynomial::variable(v); }

/// ε_jkl x^k p_l, spatial indices 1..3.
PhasePolynomial angular_momentum(int j) {
    PhasePolynomial out;
    for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) {
            const int eps = levi_civita(j, k, l);
            if (eps == 0) continue;
            out += var(PhaseVar::x1 + static_cast<std::size_t>(k)) *
                   var(PhaseVar::p1 + static_cast<std::size_t>(l)) * Rational(eps);
        }
    return out;
}

}  // namespace

Realization poincare_realization() {
    Realization r;
    for (int j = 0; j < 3; ++j) {
        const auto idx = std::to_string(j + 1);
        const auto sj = static_cast<std::size_t>(j);
        r["P" + idx] = var(PhaseVar::p1 + sj);
        r["J" + idx] = angular_momentum(j);
        r["K" + idx] = var(PhaseVar::p0) * var(PhaseVar::x1 + sj) + var(PhaseVar::x0) * var(PhaseVar::p1 + sj);
    }
    r["H"] = var(PhaseVar::p0);
    return r;
}

Realization galilei_realization() {
    Realization r;
    for (int j = 0; j < 3; ++j) {
        const auto idx = std::to_string(j + 1);
        const auto sj = static_cast<std::size_t>(j);
        r["P" + idx] = var(PhaseVar::p1 + sj);
        r["M" + idx] = angular_momentum(j);
        r["G" + idx] = var(PhaseVar::x0) * var(PhaseVar::p1 + sj);
    }
    r["H"] = var(PhaseVar::p0);
    return r;
}

RealizationCheck verify_realization(const LieStructure& s, const Realization& realization) {
    std::vector<std::string> missing;
    std::vector<const PhasePolynomial*> images;
    for (const auto& label : s.basis_labels()) {
        auto it = realization.find(label);
        if (it == realization.end()) {
            missing.push_back(label);
            images.push_back(nullptr);
        } else {
            images.push_back(&it->second);
        }
    }
    if (!missing.empty()) {
        std::string msg = "realization is missing generators:";
        for (const auto& m : missing) msg += " " + m;
        throw CompletenessError(msg, missing);
    }

    RealizationCheck report;
    const std::size_t n = s.dimension();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b) {
            ++report.pairs_checked;
            PhasePolynomial expected;
            for (const auto& [e, c] : s.bracket(a, b)) expected += *images[e] * c;
            PhasePolynomial diff = poisson_bracket(*images[a], *images[b]) - expected;
            if (!diff.is_zero()) report.mismatches.push_back({a, b, std::move(diff)});
        }
    return report;
}

}  // namespace symmetria::liealg

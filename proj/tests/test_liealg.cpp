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


#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "symmetria/errors.hpp"
#include "symmetria/liealg/polynomial.hpp"
#include "symmetria/liealg/structure.hpp"

using namespace symmetria;
using namespace symmetria::liealg;

namespace {

PhasePolynomial var(std::size_t i) { return PhasePolynomial::variable(i); }

// Jacobi through the adjoint representation: ad(X_a) ad(X_b) - ad(X_b) ad(X_a)
// must equal sum_d c[a][b][d] ad(X_d), with ad(X_a)[f][e] = c[a][e][f].
int adjoint_defects(const LieStructure& s) {
    const std::size_t n = s.dimension();
    auto ad = [&](std::size_t a, std::size_t f, std::size_t e) { return s.constant(a, e, f); };
    int defects = 0;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t f = 0; f < n; ++f)
                for (std::size_t e = 0; e < n; ++e) {
                    Rational lhs = 0;
                    for (std::size_t m = 0; m < n; ++m) lhs += ad(a, f, m) * ad(b, m, e) - ad(b, f, m) * ad(a, m, e);
                    Rational rhs = 0;
                    for (std::size_t d = 0; d < n; ++d) rhs += s.constant(a, b, d) * ad(d, f, e);
                    if (lhs != rhs) ++defects;
                }
    return defects;
}

Rational bracket_coeff(const LieStructure& s, const std::string& a, const std::string& b, const std::string& out) {
    return s.constant(s.index_of(a), s.index_of(b), s.index_of(out));
}

}  // namespace

TEST_CASE("polynomial arithmetic is canonical") {
    const auto x = var(x1), p = var(p1);
    const auto zero = x * p - p * x;
    CHECK(zero.is_zero());
    CHECK((x + x).coefficient({0, 2, 0, 0, 0, 0, 0, 0}) == 0);
    CHECK((x + x).coefficient({0, 1, 0, 0, 0, 0, 0, 0}) == 2);
    CHECK((x * x * p).degree() == 3);
    CHECK(PhasePolynomial().degree() == -1);
    CHECK((x * x).derivative(x1) == x * Rational(2));
}

TEST_CASE("canonical brackets") {
    CHECK(poisson_bracket(var(x1), var(p1)) == PhasePolynomial::constant(1));
    CHECK(poisson_bracket(var(p1), var(x1)) == PhasePolynomial::constant(-1));
    CHECK(poisson_bracket(var(x1), var(p2)).is_zero());
    CHECK(poisson_bracket(var(x0), var(p0)) == PhasePolynomial::constant(1));

    // With {x, p} = 1: the x1 slot gives p2·x2, the p2 slot gives −x1·p1.
    const auto lhs = poisson_bracket(var(x1) * var(p2), var(x2) * var(p1));
    CHECK(lhs == var(x2) * var(p2) - var(x1) * var(p1));
}

TEST_CASE("bracket of a polynomial with itself vanishes, and Jacobi holds") {
    std::mt19937_64 rng(5);
    auto random_poly = [&] {
        PhasePolynomial f;
        for (int t = 0; t < 4; ++t) {
            Exponents<8> e{};
            for (auto& k : e) k = static_cast<int>(rng() % 3 == 0 ? rng() % 3 : 0);
            f.add_term(e, Rational(static_cast<long>(rng() % 11) - 5, static_cast<long>(rng() % 4) + 1));
        }
        return f;
    };
    for (int i = 0; i < 10; ++i) {
        const auto f = random_poly(), g = random_poly(), h = random_poly();
        CHECK(poisson_bracket(f, f).is_zero());
        CHECK((poisson_bracket(f, g) + poisson_bracket(g, f)).is_zero());
        const auto jac = poisson_bracket(f, poisson_bracket(g, h)) + poisson_bracket(g, poisson_bracket(h, f)) +
                         poisson_bracket(h, poisson_bracket(f, g));
        CHECK(jac.is_zero());
    }
}

TEST_CASE("both tables have ten generators and pass exactly") {
    for (const auto& s : {galilei_algebra(), poincare_algebra()}) {
        CAPTURE(s.name());
        CHECK(s.dimension() == 10);
        const auto chk = check_structure(s);
        CHECK(chk.antisymmetry.empty());
        CHECK(chk.jacobi.empty());
        CHECK(adjoint_defects(s) == 0);
    }
}

TEST_CASE("selected Poincare brackets") {
    const auto s = poincare_algebra();
    CHECK(bracket_coeff(s, "J1", "J2", "J3") == 1);
    CHECK(bracket_coeff(s, "K1", "K2", "J3") == -1);
    CHECK(bracket_coeff(s, "K2", "P2", "H") == 1);
    CHECK(bracket_coeff(s, "K1", "P2", "H") == 0);
    CHECK(bracket_coeff(s, "K3", "H", "P3") == 1);
    CHECK(bracket_coeff(s, "J1", "K2", "K3") == 1);
    CHECK(bracket_coeff(s, "P1", "H", "P1") == 0);
}

TEST_CASE("selected Galilei brackets") {
    const auto s = galilei_algebra();
    CHECK(bracket_coeff(s, "M1", "M2", "M3") == 1);
    CHECK(bracket_coeff(s, "M3", "P1", "P2") == 1);
    CHECK(bracket_coeff(s, "H", "G2", "P2") == -1);
    CHECK(bracket_coeff(s, "G2", "H", "P2") == 1);
    for (const auto& out : s.basis_labels()) {
        CHECK(bracket_coeff(s, "P1", "G1", out) == 0);
        CHECK(bracket_coeff(s, "G1", "G2", out) == 0);
        CHECK(bracket_coeff(s, "P1", "H", out) == 0);
    }
}

TEST_CASE("an injected bad constant is caught by both checkers") {
    auto s = poincare_algebra();
    const auto J1 = s.index_of("J1"), J2 = s.index_of("J2"), J3 = s.index_of("J3");
    s.set_bracket(J2, J3, {{J1, Rational(-1)}});
    const auto chk = check_structure(s);
    CHECK(chk.antisymmetry.empty());
    REQUIRE_FALSE(chk.jacobi.empty());
    bool involves_pair = false;
    for (const auto& d : chk.jacobi) {
        const std::size_t idx[] = {d.a, d.b, d.e};
        int hits = 0;
        for (auto i : idx) hits += (i == J2 || i == J3);
        involves_pair = involves_pair || hits == 2;
    }
    CHECK(involves_pair);
    CHECK(adjoint_defects(s) > 0);
}

TEST_CASE("one-sided constants break antisymmetry") {
    auto s = galilei_algebra();
    s.set_constant(s.index_of("P1"), s.index_of("P2"), s.index_of("H"), Rational(1, 3));
    const auto chk = check_structure(s);
    REQUIRE(chk.antisymmetry.size() == 1);
    CHECK(chk.antisymmetry[0].defect == Rational(1, 3));
}

TEST_CASE("phase-space realizations reproduce the tables") {
    const auto p = verify_realization(poincare_algebra(), poincare_realization());
    CHECK(p.passed());
    CHECK(p.pairs_checked == 45);
    const auto g = verify_realization(galilei_algebra(), galilei_realization());
    CHECK(g.passed());
    CHECK(g.pairs_checked == 45);

    // K_j = p0 x^j + x0 p_j against {K_1, P_1} = H = p0 by hand.
    const auto r = poincare_realization();
    CHECK(poisson_bracket(r.at("K1"), r.at("P1")) == var(p0));
}

TEST_CASE("a realization that disagrees is reported pairwise") {
    auto r = galilei_realization();
    r["G1"] = var(x0) * var(p1) * Rational(2);
    const auto chk = verify_realization(galilei_algebra(), r);
    CHECK_FALSE(chk.passed());
    for (const auto& m : chk.mismatches) CHECK_FALSE(m.difference.is_zero());
}

TEST_CASE("missing generators raise a completeness error") {
    try {
        verify_realization(poincare_algebra(), {});
        FAIL("expected CompletenessError");
    } catch (const CompletenessError& e) {
        CHECK(e.missing().size() == 10);
    }
}

TEST_CASE("Levi-Civita symbol") {
    CHECK(levi_civita(0, 1, 2) == 1);
    CHECK(levi_civita(1, 0, 2) == -1);
    CHECK(levi_civita(2, 0, 1) == 1);
    CHECK(levi_civita(0, 0, 1) == 0);
}

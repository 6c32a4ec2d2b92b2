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

#include "symmetria/sklyanin/algebra.hpp"

#include <cmath>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::sklyanin {

using numerics::BracketSign;
using numerics::commutator;
using numerics::kron;
using numerics::pauli;

double SklyaninRep::coupling(std::size_t alpha) const {
    const std::size_t beta = (alpha + 1) % 3, gamma = (alpha + 2) % 3;
    return -(J[beta] - J[gamma]) / J[alpha];
}

SklyaninRep rep2() {
    return {2, {DenseMatrix::identity(2), pauli(1), pauli(2), pauli(3)}, {1.0, 1.0, 1.0}};
}

SklyaninRep rep3(double J1, double J2, double J3) {
    if (!(J1 > 0.0) || !(J2 > 0.0) || !(J3 > 0.0))
        throw DomainError("the three-dimensional representation needs J1, J2, J3 > 0");
    const Complex i(0.0, 1.0);
    DenseMatrix s0{{J3, 0.0, J1 - J2}, {0.0, J1 + J2 - J3, 0.0}, {J1 - J2, 0.0, J3}};
    DenseMatrix s1{{0.0, 1.0, 0.0}, {1.0, 0.0, 1.0}, {0.0, 1.0, 0.0}};
    DenseMatrix s2{{0.0, -i, 0.0}, {i, 0.0, -i}, {0.0, i, 0.0}};
    DenseMatrix s3{{1.0, 0.0, 0.0}, {0.0, 0.0, 0.0}, {0.0, 0.0, -1.0}};
    s1 *= std::sqrt(2.0 * J2 * J3);
    s2 *= std::sqrt(2.0 * J3 * J1);
    s3 *= 2.0 * std::sqrt(J1 * J2);
    return {3, {s0, s1, s2, s3}, {J1, J2, J3}};
}

SklyaninResiduals sklyanin_residuals(const SklyaninRep& rep) {
    const Complex i(0.0, 1.0);
    SklyaninResiduals r{0.0, 0.0};
    for (std::size_t a = 0; a < 3; ++a) {
        const auto& sa = rep.S[a + 1];
        const auto& sb = rep.S[(a + 1) % 3 + 1];
        const auto& sg = rep.S[(a + 2) % 3 + 1];
        const auto first = commutator(sa, rep.S[0]) + (i * rep.coupling(a)) * commutator(sb, sg, BracketSign::plus);
        const auto second = commutator(sa, sb) - i * commutator(rep.S[0], sg, BracketSign::plus);
        r.first = std::max(r.first, first.sup_norm());
        r.second = std::max(r.second, second.sup_norm());
    }
    return r;
}

double sklyanin_residual(const SklyaninRep& rep) { return sklyanin_residuals(rep).max(); }

double self_adjointness_residual(const SklyaninRep& rep) {
    double worst = 0.0;
    for (const auto& s : rep.S) worst = std::max(worst, numerics::sup_distance(s, s.adjoint()));
    return worst;
}

DenseMatrix L_operator(double u, const SklyaninRep& rep, const QuantumRParams& p) {
    const auto W = quantum_W(u, p);
    DenseMatrix L = kron(pauli(0), rep.S[0]);
    for (std::size_t a = 0; a < 3; ++a) L += W[a] * kron(pauli(static_cast<int>(a) + 1), rep.S[a + 1]);
    return L;
}

double rll_residual(double u, double v, const SklyaninRep& rep, const QuantumRParams& p) {
    const std::array<std::size_t, 3> dims = {2, 2, rep.dim};
    const std::array<std::size_t, 2> aux = {0, 1}, first = {0, 2}, second = {1, 2};
    const auto R = numerics::embed(quantum_R(u - v, p), aux, dims);
    const auto L1 = numerics::embed(L_operator(u, rep, p), first, dims);
    const auto L2 = numerics::embed(L_operator(v, rep, p), second, dims);
    return numerics::sup_distance(R * L1 * L2, L2 * L1 * R);
}

std::array<double, 3> rep3_couplings_from_curve(const QuantumRParams& p, double u_ref) {
    const auto c = curve_constants(quantum_W(u_ref, p));
    // 𝐉_{αβ} J_γ + J_α − J_β = 0 for each cyclic triple.
    const std::array<std::array<Complex, 3>, 3> m = {{{1.0, -1.0, c[0]}, {c[1], 1.0, -1.0}, {-1.0, c[2], 1.0}}};
    std::array<Complex, 3> nv = {m[0][1] * m[1][2] - m[0][2] * m[1][1], m[0][2] * m[1][0] - m[0][0] * m[1][2],
                                 m[0][0] * m[1][1] - m[0][1] * m[1][0]};
    if (std::abs(nv[0]) == 0.0) throw DomainError("curve constants give a degenerate coupling system");
    const Complex scale = nv[0];
    for (auto& x : nv) x /= scale;
    double residual = 0.0;
    for (const auto& row : m) residual = std::max(residual, std::abs(row[0] * nv[0] + row[1] * nv[1] + row[2] * nv[2]));
    std::array<double, 3> J{};
    for (std::size_t a = 0; a < 3; ++a) {
        if (std::abs(nv[a].imag()) > 1e-9) throw DomainError("curve constants are not real");
        J[a] = nv[a].real();
    }
    if (residual > 1e-8) throw DomainError("curve constants admit no coupling triple");
    if (!(J[1] > 0.0) || !(J[2] > 0.0)) {
        std::ostringstream os;
        os << "curve couplings are not all positive: (" << J[0] << ", " << J[1] << ", " << J[2] << ")";
        throw DomainError(os.str());
    }
    return J;
}

int levi_civita4(std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const std::array<std::size_t, 4> p = {i, j, k, l};
    int sign = 1;
    for (std::size_t a = 0; a < 4; ++a)
        for (std::size_t b = a + 1; b < 4; ++b) {
            if (p[a] == p[b] || p[a] > 3) return 0;
            if (p[a] > p[b]) sign = -sign;
        }
    return p[3] > 3 ? 0 : sign;
}

Bivector4 poisson_tensor(const PoissonTensorSpec& spec) {
    Bivector4 lambda;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l)
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = i + 1; j < 4; ++j) {
                    const int e = levi_civita4(k, l, i, j);
                    if (e == 0) continue;
                    const Rational c = e * (spec.a[i] * spec.b[j] - spec.b[i] * spec.a[j]);
                    lambda.table[k][l] += c * Poly4::variable(i) * Poly4::variable(j);
                }
    return lambda;
}

JacobiReport poisson_jacobi_check(const Bivector4& lambda) {
    JacobiReport r{lambda.is_antisymmetric(), 0, 0};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            for (std::size_t k = j + 1; k < 4; ++k) {
                ++r.triples_checked;
                if (!lambda.jacobiator(i, j, k).is_zero()) ++r.failures;
            }
    return r;
}

Bivector4 sklyanin_bracket_reference(const Rational& a1, const Rational& a2, const Rational& a3) {
    const std::array<Rational, 4> a = {Rational(1), a1, a2, a3};
    auto eps3 = [](std::size_t j, std::size_t k, std::size_t l) { return levi_civita4(0, j, k, l); };
    Bivector4 ref;
    const auto x0 = Poly4::variable(0);
    for (std::size_t k = 1; k < 4; ++k)
        for (std::size_t l = 1; l < 4; ++l) {
            if (k == l) continue;
            const std::size_t j = 6 - k - l;
            ref.table[k][l] = Rational(eps3(j, k, l)) * x0 * Poly4::variable(j);
        }
    for (std::size_t k = 1; k < 4; ++k) {
        std::size_t j = k == 1 ? 2 : 1;
        std::size_t l = 6 - k - j;
        const Rational c = eps3(j, k, l) * (a[j] - a[l]);
        ref.table[k][0] = c * Poly4::variable(j) * Poly4::variable(l);
        ref.table[0][k] = -ref.table[k][0];
    }
    return ref;
}

std::size_t bivector_mismatches(const Bivector4& x, const Bivector4& y) {
    std::size_t n = 0;
    for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t l = 0; l < 4; ++l)
            if (!(x.table[k][l] == y.table[k][l])) ++n;
    return n;
}

}  // namespace symmetria::sklyanin

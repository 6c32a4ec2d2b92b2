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

#include "symmetria/sklyanin/classical_limit.hpp"

#include <cmath>

#include "symmetria/errors.hpp"
#include "symmetria/liealg/polynomial.hpp"
#include "symmetria/numerics/fit.hpp"

namespace symmetria::sklyanin {

ClassicalLimitProbe classical_limit_probe(double u, const ClassicalRParams& base, const std::vector<double>& h) {
    if (h.size() < 2) throw ProbeError("classical-limit probe needs at least two h values");
    ClassicalLimitProbe probe{h, {}, {}, {}};
    std::array<double, 3> w{};
    DenseMatrix r(4, 4);
    try {
        w = classical_w(u, base);
        r = classical_r(u, base);
    } catch (const PoleError& e) {
        throw ProbeError(std::string("classical-limit probe: ") + e.what());
    }
    const auto J = quadric_constants(w);
    const Complex i(0.0, 1.0);
    for (double hv : h) {
        if (!(hv > 0.0)) throw ProbeError("h values must be positive");
        try {
            const QuantumRParams q(base.rho * hv, base.k);
            const auto W = quantum_W(u, q);
            double e1 = 0.0, e3 = 0.0;
            for (std::size_t a = 0; a < 3; ++a) e1 = std::max(e1, std::abs(W[a] - i * hv * w[a]));
            const auto curve = curve_constants(W);
            for (std::size_t a = 0; a < 3; ++a) e3 = std::max(e3, std::abs(curve[a] - hv * hv * J[a]));
            const auto R = quantum_R(u, q);
            const double e2 = (R - DenseMatrix::identity(4) - (i * hv) * r).sup_norm();
            probe.w_error.errors.push_back(e1);
            probe.r_error.errors.push_back(e2);
            probe.j_error.errors.push_back(e3);
        } catch (const PoleError& e) {
            throw ProbeError(std::string("classical-limit probe: ") + e.what());
        }
    }
    for (auto* series : {&probe.w_error, &probe.r_error, &probe.j_error}) {
        for (double e : series->errors)
            if (!(e > 0.0)) throw ProbeError("classical-limit error underflowed to zero; choose larger h");
        series->slope = numerics::log_log_slope(h, series->errors).slope;
    }
    return probe;
}

namespace {

using CPoly = liealg::Polynomial<Complex, 4>;
using CBivector = liealg::PoissonBivector<Complex, 4>;

CBivector bracket_table(const std::array<double, 3>& w, IndexReading reading, BracketModel model) {
    CBivector lam;
    if (model == BracketModel::zero) return lam;
    const auto S = [](std::size_t i) { return CPoly::variable(i); };
    auto J = [&](std::size_t b, std::size_t g) { return w[b - 1] * w[b - 1] - w[g - 1] * w[g - 1]; };
    for (std::size_t a = 1; a <= 3; ++a) {
        const std::size_t b = a % 3 + 1, g = (a + 1) % 3 + 1;
        CPoly to_zero;
        if (reading == IndexReading::cyclic) {
            to_zero = Complex(2.0 * J(b, g)) * S(b) * S(g);
        } else {
            for (std::size_t bb = 1; bb <= 3; ++bb)
                for (std::size_t gg = 1; gg <= 3; ++gg)
                    if (bb != gg && bb != a && gg != a) to_zero += Complex(2.0 * J(bb, gg)) * S(bb) * S(gg);
        }
        lam.table[a][0] = to_zero;
        lam.table[0][a] = -to_zero;
        lam.table[a][b] = Complex(-2.0) * S(0) * S(g);
        lam.table[b][a] = Complex(2.0) * S(0) * S(g);
    }
    return lam;
}

/// L(u) = S₀ + i Σ w_α S_α σ_α as a 2×2 table of polynomials.
std::array<std::array<CPoly, 2>, 2> classical_L(const std::array<double, 3>& w) {
    std::array<std::array<CPoly, 2>, 2> L;
    const Complex i(0.0, 1.0);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 2; ++c) {
            if (r == c) L[r][c] += CPoly::variable(0);
            for (std::size_t a = 0; a < 3; ++a) {
                const Complex entry = numerics::pauli(static_cast<int>(a) + 1)(r, c);
                if (entry != Complex{}) L[r][c] += (i * w[a] * entry) * CPoly::variable(a + 1);
            }
        }
    return L;
}

}  // namespace

double classical_sklyanin_bracket_check(const ClassicalRParams& p, double u, double v, IndexReading reading,
                                        BracketModel model) {
    const auto wu = classical_w(u, p);
    const auto wv = classical_w(v, p);
    const auto r = classical_r(u - v, p);
    const auto lam = bracket_table(wu, reading, model);
    const auto Lu = classical_L(wu);
    const auto Lv = classical_L(wv);

    // Row (i,k), column (j,l) ↔ index 2i+k, 2j+l.
    std::array<std::array<CPoly, 4>, 4> lhs, prod;
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                for (std::size_t l = 0; l < 2; ++l) {
                    lhs[2 * i + k][2 * j + l] = lam.bracket(Lu[i][j], Lv[k][l]);
                    prod[2 * i + k][2 * j + l] = Lu[i][j] * Lv[k][l];
                }
    double worst = 0.0;
    for (std::size_t row = 0; row < 4; ++row)
        for (std::size_t col = 0; col < 4; ++col) {
            CPoly diff = lhs[row][col];
            for (std::size_t m = 0; m < 4; ++m) {
                if (r(row, m) != Complex{}) diff -= r(row, m) * prod[m][col];
                if (r(m, col) != Complex{}) diff += r(m, col) * prod[row][m];
            }
            for (const auto& [e, c] : diff.terms()) worst = std::max(worst, std::abs(c));
        }
    return worst;
}

}  // namespace symmetria::sklyanin

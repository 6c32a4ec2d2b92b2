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

#include "symmetria/sklyanin/rmatrix.hpp"

#include <cmath>
#include <sstream>

#include "symmetria/elliptic.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/numerics/random.hpp"

namespace symmetria::sklyanin {

using numerics::embed;
using numerics::kron;
using numerics::pauli;

ClassicalRParams::ClassicalRParams(double rho_, double k_) : rho(rho_), k(k_) {
    if (!(rho > 0.0) || !std::isfinite(rho)) throw DomainError("rho must be positive");
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("modulus must satisfy 0 <= k < 1");
}

QuantumRParams::QuantumRParams(double eta_, double k_) : eta(eta_), k(k_) {
    if (eta == 0.0 || !std::isfinite(eta)) throw DomainError("eta must be nonzero");
    if (!(k >= 0.0 && k < 1.0)) throw DomainError("modulus must satisfy 0 <= k < 1");
}

namespace {

double nearest_real_zero(double u, double k) {
    const double period = 2.0 * elliptic::quarter_period(k);
    return period * std::round(u / period);
}

/// Nearest zero of sn on the lattice 2mK + 2niK' (real multiples only at k = 0).
Complex nearest_complex_zero(Complex z, double k) {
    const double re = nearest_real_zero(z.real(), k);
    if (k == 0.0) return {re, 0.0};
    const elliptic::EllipticModulus mod(k);
    const double period = 2.0 * mod.quarter_period_K_prime();
    return {re, period * std::round(z.imag() / period)};
}

void reject_zero(Complex z, double k, const char* what) {
    const Complex zero = nearest_complex_zero(z, k);
    if (std::abs(z - zero) < elliptic::pole_rejection_distance) {
        std::ostringstream os;
        os << what << ": sn vanishes at the argument " << z;
        throw PoleError(os.str(), zero);
    }
}

const std::array<std::size_t, 3> dims3 = {2, 2, 2};

DenseMatrix leg(const DenseMatrix& m, std::size_t a, std::size_t b) {
    const std::array<std::size_t, 2> legs = {a, b};
    return embed(m, legs, dims3);
}

}  // namespace

double distance_to_sn_zero(double u, double k) { return std::abs(u - nearest_real_zero(u, k)); }

std::array<double, 3> classical_w(double u, const ClassicalRParams& p) {
    reject_zero(Complex(u, 0.0), p.k, "classical r-matrix");
    const auto e = elliptic::sn_cn_dn(u, p.k);
    return {p.rho / e.sn, p.rho * e.dn / e.sn, p.rho * e.cn / e.sn};
}

DenseMatrix pauli_sum(const std::array<Complex, 3>& c) {
    DenseMatrix out(4, 4);
    for (int a = 0; a < 3; ++a) out += c[static_cast<std::size_t>(a)] * kron(pauli(a + 1), pauli(a + 1));
    return out;
}

DenseMatrix classical_r(double u, const ClassicalRParams& p) {
    const auto w = classical_w(u, p);
    return pauli_sum({w[0], w[1], w[2]});
}

double cybe_residual(const RMatrixFn& r, double u, double v) {
    const auto r12 = leg(r(u - v), 0, 1);
    const auto r13 = leg(r(u), 0, 2);
    const auto r23 = leg(r(v), 1, 2);
    using numerics::commutator;
    return (commutator(r12, r13) + commutator(r12, r23) + commutator(r13, r23)).sup_norm();
}

double cybe_residual(double u, double v, const ClassicalRParams& p) {
    return cybe_residual([&p](double x) { return classical_r(x, p); }, u, v);
}

std::array<Complex, 3> quantum_W(double u, const QuantumRParams& p) {
    const Complex z(u, p.eta);
    const Complex ieta(0.0, p.eta);
    reject_zero(z, p.k, "quantum R-matrix");
    const auto a = elliptic::sn_cn_dn(z, p.k);
    const auto b = elliptic::sn_cn_dn(ieta, p.k);
    return {b.sn / a.sn, (a.dn / a.sn) * (b.sn / b.dn), (a.cn / a.sn) * (b.sn / b.cn)};
}

DenseMatrix quantum_R(double u, const QuantumRParams& p) {
    return DenseMatrix::identity(4) + pauli_sum(quantum_W(u, p));
}

double qybe_residual(const RMatrixFn& R, double u, double v) {
    const auto r12 = leg(R(u - v), 0, 1);
    const auto r13 = leg(R(u), 0, 2);
    const auto r23 = leg(R(v), 1, 2);
    return numerics::sup_distance(r12 * r13 * r23, r23 * r13 * r12);
}

double qybe_residual(double u, double v, const QuantumRParams& p) {
    return qybe_residual([&p](double x) { return quantum_R(x, p); }, u, v);
}

std::array<Complex, 3> curve_constants(const std::array<Complex, 3>& W) {
    std::array<Complex, 3> out;
    for (std::size_t a = 0; a < 3; ++a) {
        const std::size_t b = (a + 1) % 3, g = (a + 2) % 3;
        out[a] = (W[a] * W[a] - W[b] * W[b]) / (W[g] * W[g] - 1.0);
    }
    return out;
}

std::array<double, 3> quadric_constants(const std::array<double, 3>& w) {
    std::array<double, 3> out;
    for (std::size_t a = 0; a < 3; ++a) {
        const std::size_t b = (a + 1) % 3;
        out[a] = w[a] * w[a] - w[b] * w[b];
    }
    return out;
}

DenseMatrix swap_matrix() {
    DenseMatrix p(4, 4);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) p(i * 2 + j, j * 2 + i) = 1.0;
    return p;
}

std::vector<std::pair<double, double>> sample_pole_free_pairs(std::mt19937_64& rng, std::size_t count, double k,
                                                              double lo, double hi) {
    std::vector<std::pair<double, double>> out;
    while (out.size() < count) {
        const double u = numerics::uniform(rng, lo, hi);
        const double v = numerics::uniform(rng, lo, hi);
        if (distance_to_sn_zero(u, k) < pole_margin || distance_to_sn_zero(v, k) < pole_margin ||
            distance_to_sn_zero(u - v, k) < pole_margin)
            continue;
        out.emplace_back(u, v);
    }
    return out;
}

}  // namespace symmetria::sklyanin

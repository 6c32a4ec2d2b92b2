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

#include <cmath>
#include <numbers>
#include <random>

#include "frozen_values.hpp"
#include "symmetria/elliptic.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/sklyanin/algebra.hpp"
#include "symmetria/sklyanin/classical_limit.hpp"
#include "symmetria/sklyanin/rmatrix.hpp"

using namespace symmetria;
using namespace symmetria::sklyanin;
using numerics::kron;
using numerics::pauli;
using numerics::sup_distance;
using namespace std::complex_literals;

namespace {

constexpr double pi = std::numbers::pi;

DenseMatrix hand_R(const std::array<Complex, 3>& W) {
    DenseMatrix R = DenseMatrix::identity(4);
    for (int a = 1; a <= 3; ++a) R += kron(pauli(a), pauli(a)) * W[a - 1];
    return R;
}

double spread(const std::array<double, 3>& a, const std::array<double, 3>& b) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s = std::max(s, std::abs(a[i] - b[i]));
    return s;
}

}  // namespace

TEST_CASE("classical weights") {
    const auto w = classical_w(pi / 4, ClassicalRParams(1.0, 0.0));
    CHECK(w[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(w[2] == doctest::Approx(1.0).epsilon(1e-14));

    const auto e = classical_w(0.4, ClassicalRParams(1.0, 0.5));
    CHECK(std::abs(e[0] - frozen::w1_k0p5_u0p4) < 1e-13);
    CHECK(std::abs(e[1] - frozen::w2_k0p5_u0p4) < 1e-13);
    CHECK(std::abs(e[2] - frozen::w3_k0p5_u0p4) < 1e-13);

    CHECK_THROWS_AS(classical_w(0.0, ClassicalRParams(1.0, 0.5)), PoleError);
    CHECK_THROWS_AS(ClassicalRParams(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(ClassicalRParams(1.0, 1.0), DomainError);
}

TEST_CASE("quadric constancy") {
    const ClassicalRParams trig(1.7, 0.0);
    for (double u : {0.3, 1.0, 2.2}) {
        const auto w = classical_w(u, trig);
        CHECK(std::abs(w[0] * w[0] - w[2] * w[2] - 1.7 * 1.7) < 1e-12);
    }
    const ClassicalRParams p(1.0, 0.5);
    CHECK(spread(quadric_constants(classical_w(0.4, p)), quadric_constants(classical_w(1.1, p))) < 1e-10);
}

TEST_CASE("classical r-matrix assembly, symmetry and parity") {
    const ClassicalRParams p(1.0, 0.0);
    const auto w = classical_w(0.7, p);
    const auto r = classical_r(0.7, p);
    DenseMatrix hand(4, 4);
    for (int a = 1; a <= 3; ++a) hand += kron(pauli(a), pauli(a)) * Complex(w[a - 1]);
    CHECK(sup_distance(r, hand) == 0.0);
    CHECK(sup_distance(r, r.transpose()) == 0.0);
    CHECK(sup_distance(classical_r(-0.7, p), -r) < 1e-14);
    CHECK(sup_distance(classical_r(0.9, ClassicalRParams(1.0, 0.6)),
                       classical_r(0.9, ClassicalRParams(1.0, 0.6)).transpose()) == 0.0);
}

TEST_CASE("classical Yang-Baxter equation") {
    CHECK(cybe_residual(1.1, 0.4, ClassicalRParams(1.0, 0.0)) < 1e-10);
    const ClassicalRParams p(1.0, 0.5);
    std::mt19937_64 rng(31);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 20, 0.5)) CHECK(cybe_residual(u, v, p) < 1e-9);

    RMatrixFn perturbed = [&p](double u) {
        auto w = classical_w(u, p);
        w[0] *= 1.01;
        return pauli_sum({w[0], w[1], w[2]});
    };
    CHECK(cybe_residual(perturbed, 1.1, 0.4) > 1e-3);
}

TEST_CASE("quantum weights") {
    const QuantumRParams p(0.3, 0.5);
    const auto W0 = quantum_W(0.0, p);
    for (const auto& w : W0) CHECK(std::abs(w - 1.0) < 1e-14);

    const auto W = quantum_W(0.7, p);
    CHECK(std::abs(W[0] - frozen::W1_eta0p3_k0p5_u0p7) < 1e-12);
    CHECK(std::abs(W[1] - frozen::W2_eta0p3_k0p5_u0p7) < 1e-12);
    CHECK(std::abs(W[2] - frozen::W3_eta0p3_k0p5_u0p7) < 1e-12);

    const auto T = quantum_W(0.7, QuantumRParams(0.3, 0.0));
    CHECK(std::abs(T[0] - T[1]) < 1e-14);
    CHECK(std::abs(T[0] - std::sin(0.3i) / std::sin(0.7 + 0.3i)) < 1e-14);
    CHECK_THROWS_AS(QuantumRParams(0.0, 0.5), DomainError);
}

TEST_CASE("quantum R-matrix entries and regular point") {
    const QuantumRParams p(0.3, 0.5);
    const std::array<Complex, 3> W{frozen::W1_eta0p3_k0p5_u0p7, frozen::W2_eta0p3_k0p5_u0p7,
                                   frozen::W3_eta0p3_k0p5_u0p7};
    CHECK(sup_distance(quantum_R(0.7, p), hand_R(W)) < 1e-9);
    CHECK(sup_distance(quantum_R(0.0, p), swap_matrix() * Complex(2.0)) < 1e-14);

    // ‖R − 1‖ shrinks linearly with η.
    const double a = (quantum_R(0.7, QuantumRParams(1e-3, 0.5)) - DenseMatrix::identity(4)).sup_norm();
    const double b = (quantum_R(0.7, QuantumRParams(1e-4, 0.5)) - DenseMatrix::identity(4)).sup_norm();
    CHECK(a / b == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("curve constancy") {
    const QuantumRParams p(0.3, 0.5);
    const auto a = curve_constants(quantum_W(0.3, p));
    const auto b = curve_constants(quantum_W(0.9, p));
    for (int i = 0; i < 3; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-9);
}

TEST_CASE("quantum Yang-Baxter equation") {
    std::mt19937_64 rng(32);
    const QuantumRParams trig(0.3, 0.0), ell(0.3, 0.5);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 20, 0.0)) CHECK(qybe_residual(u, v, trig) < 1e-10);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 20, 0.5)) CHECK(qybe_residual(u, v, ell) < 1e-9);
    CHECK(qybe_residual(1.1, 0.0, ell) < 1e-9);
}

TEST_CASE("pole-free sampling keeps its margins") {
    std::mt19937_64 rng(33);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 50, 0.5)) {
        CHECK(distance_to_sn_zero(u, 0.5) >= pole_margin);
        CHECK(distance_to_sn_zero(v, 0.5) >= pole_margin);
        CHECK(distance_to_sn_zero(u - v, 0.5) >= pole_margin);
    }
    CHECK(distance_to_sn_zero(2.0 * elliptic::quarter_period(0.5) + 0.01, 0.5) == doctest::Approx(0.01));
}

TEST_CASE("commutation relations in two and three dimensions") {
    CHECK(sklyanin_residual(rep2()) == 0.0);
    const auto r3 = rep3(1, 2, 3);
    CHECK(sklyanin_residual(r3) < 1e-12);
    CHECK(self_adjointness_residual(r3) < 1e-12);
    std::mt19937_64 rng(34);
    std::uniform_real_distribution<double> J(0.5, 3.0);
    for (int i = 0; i < 3; ++i) CHECK(sklyanin_residual(rep3(J(rng), J(rng), J(rng))) < 1e-12);

    auto flipped = r3;
    flipped.S[3] = -flipped.S[3];
    CHECK(sklyanin_residual(flipped) > 0.1);

    CHECK_THROWS_AS(rep3(1, 0, 2), DomainError);
    CHECK_THROWS_AS(rep3(-1, 1, 2), DomainError);
}

TEST_CASE("coupling index pattern") {
    const auto r = rep3(1, 2, 3);
    CHECK(r.coupling(0) == doctest::Approx(-(2.0 - 3.0) / 1.0));
    CHECK(r.coupling(1) == doctest::Approx(-(3.0 - 1.0) / 2.0));
    CHECK(r.coupling(2) == doctest::Approx(-(1.0 - 2.0) / 3.0));
}

TEST_CASE("L-operator assembly") {
    const QuantumRParams p(0.3, 0.5);
    CHECK(sup_distance(L_operator(0.0, rep2(), p), swap_matrix() * Complex(2.0)) < 1e-14);
    const auto W = quantum_W(0.8, p);
    CHECK(sup_distance(L_operator(0.8, rep2(), p), hand_R(W)) < 1e-15);
    const auto L3 = L_operator(0.8, rep3(1, 2, 3), p);
    CHECK(L3.rows() == 6);
    CHECK(L3.cols() == 6);
}

TEST_CASE("RLL relation") {
    std::mt19937_64 rng(35);
    for (double eta : {0.2, 0.3})
        for (double k : {0.0, 0.3, 0.5}) {
            const QuantumRParams p(eta, k);
            for (const auto& [u, v] : sample_pole_free_pairs(rng, 10, k)) CHECK(rll_residual(u, v, rep2(), p) < 1e-9);
        }

    auto scaled = rep2();
    scaled.S[1] *= 1.05;
    CHECK(rll_residual(1.1, 0.4, scaled, QuantumRParams(0.3, 0.5)) > 1e-3);
}

TEST_CASE("three-dimensional RLL with couplings from the curve") {
    const QuantumRParams p(0.3, 0.5);
    const auto J = rep3_couplings_from_curve(p);
    CHECK(J[0] == 1.0);
    CHECK(std::abs(J[1] - frozen::J2_curve) < 1e-10);
    CHECK(std::abs(J[2] - frozen::J3_curve) < 1e-10);
    std::mt19937_64 rng(36);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 10, 0.5))
        CHECK(rll_residual(u, v, rep3(J[0], J[1], J[2]), p) < 1e-9);
    CHECK(rll_residual(1.1, 0.4, rep3(1, 2, 3), p) > 1e-3);
}

TEST_CASE("Poisson tensor from two linear forms") {
    using R = Rational;
    CHECK(levi_civita4(0, 1, 2, 3) == 1);
    CHECK(levi_civita4(1, 0, 2, 3) == -1);
    CHECK(levi_civita4(0, 0, 2, 3) == 0);

    const PoissonTensorSpec same{{R(1), R(2), R(3), R(4)}, {R(1), R(2), R(3), R(4)}};
    const auto zero = poisson_tensor(same);
    for (const auto& row : zero.table)
        for (const auto& entry : row) CHECK(entry.is_zero());

    const PoissonTensorSpec sk{{R(1), R(2), R(5), R(-3)}, {R(0), R(1), R(1), R(1)}};
    const auto lambda = poisson_tensor(sk);
    CHECK(bivector_mismatches(lambda, sklyanin_bracket_reference(R(2), R(5), R(-3))) == 0);
    const auto rep = poisson_jacobi_check(lambda);
    CHECK(rep.antisymmetric);
    CHECK(rep.failures == 0);

    // {x_1, x_2} = x_0 x_3 with ε_{312} = +1.
    const auto x0x3 = Poly4::variable(0) * Poly4::variable(3);
    CHECK(lambda.table[1][2] == x0x3);

    std::mt19937_64 rng(37);
    for (int i = 0; i < 20; ++i) {
        PoissonTensorSpec s;
        for (int j = 0; j < 4; ++j) {
            s.a[j] = R(static_cast<long>(rng() % 11) - 5);
            s.b[j] = R(static_cast<long>(rng() % 11) - 5);
        }
        const auto chk = poisson_jacobi_check(poisson_tensor(s));
        CHECK(chk.antisymmetric);
        CHECK(chk.triples_checked == 4);
        CHECK(chk.failures == 0);
    }
}

TEST_CASE("classical limit orders") {
    const auto probe = classical_limit_probe(0.8, ClassicalRParams(1.0, 0.0), {1e-1, 3e-2, 1e-2, 3e-3, 1e-3});
    CHECK(probe.w_error.slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK(probe.r_error.slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK(probe.j_error.slope == doctest::Approx(4.0).epsilon(0.05));
    const auto ell = classical_limit_probe(0.8, ClassicalRParams(1.0, 0.5), {1e-1, 3e-2, 1e-2, 3e-3, 1e-3});
    CHECK(ell.w_error.slope >= 1.9);
    CHECK(ell.r_error.slope >= 1.9);
    CHECK(ell.j_error.slope >= 3.8);
}

TEST_CASE("classical Sklyanin brackets") {
    const ClassicalRParams trig(1.0, 0.0), ell(1.0, 0.5);
    CHECK(classical_sklyanin_bracket_check(trig, 0.9, 0.4) < 1e-9);
    CHECK(classical_sklyanin_bracket_check(trig, 0.9, 0.4, IndexReading::cyclic, BracketModel::zero) > 0.1);
    CHECK(classical_sklyanin_bracket_check(ell, 0.9, 0.4, IndexReading::summed) > 1e-3);
    std::mt19937_64 rng(38);
    for (const auto& [u, v] : sample_pole_free_pairs(rng, 5, 0.5)) CHECK(classical_sklyanin_bracket_check(ell, u, v) < 1e-8);
}

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

#include "symmetria/hopf/uq_su2.hpp"

#include <algorithm>
#include <cmath>

#include "symmetria/errors.hpp"

namespace symmetria::hopf {

using numerics::commutator;
using numerics::kron;
using numerics::sup_distance;

double q_number(double n, double q) {
    if (!(q > 0.0)) throw ParameterError("q must be positive");
    if (q == 1.0) return n;
    return (std::pow(q, n) - std::pow(q, -n)) / (q - 1.0 / q);
}

UqSu2Rep::UqSu2Rep(int two_j, double q) : UqSu2Rep(two_j, q, false) {}

UqSu2Rep UqSu2Rep::classical(int two_j) { return UqSu2Rep(two_j, 1.0, true); }

UqSu2Rep::UqSu2Rep(int two_j, double q, bool allow_classical)
    : two_j_(two_j), q_(q), h_(1, 1), xp_(1, 1), xm_(1, 1) {
    if (two_j < 1 || two_j > 4) throw ParameterError("spin must be one of 1/2, 1, 3/2, 2");
    if (!(q > 0.0) || !std::isfinite(q)) throw ParameterError("q must be positive and finite");
    if (q == 1.0 && !allow_classical)
        throw ParameterError("q = 1 is the undeformed algebra; use UqSu2Rep::classical");
    const std::size_t d = dimension();
    const double j = 0.5 * two_j;
    h_ = DenseMatrix(d, d);
    xp_ = DenseMatrix(d, d);
    for (std::size_t k = 0; k < d; ++k) {
        const double m = j - static_cast<double>(k);
        h_(k, k) = 2.0 * m;
        if (k > 0) xp_(k - 1, k) = std::sqrt(q_number(j - m, q) * q_number(j + m + 1.0, q));
    }
    xm_ = xp_.transpose();
}

DenseMatrix diagonal_power(const DenseMatrix& d, double q, double s) {
    if (!d.is_square() || !d.is_diagonal()) throw DomainError("q-power needs a diagonal matrix");
    std::vector<Complex> diag(d.rows());
    for (std::size_t i = 0; i < d.rows(); ++i) diag[i] = std::pow(q, s * d(i, i).real());
    return DenseMatrix::diagonal(diag);
}

DenseMatrix UqSu2Rep::q_power_H(double s) const { return diagonal_power(h_, q_, s); }

double RelationResiduals::max() const { return std::max({h_xp, h_xm, xp_xm}); }

RelationResiduals relation_residuals(const DenseMatrix& H, const DenseMatrix& Xp, const DenseMatrix& Xm, double q) {
    RelationResiduals r{};
    r.h_xp = sup_distance(commutator(H, Xp), 2.0 * Xp);
    r.h_xm = sup_distance(commutator(H, Xm), -2.0 * Xm);
    DenseMatrix rhs = H;  // q → 1 limit of the q-bracket
    if (q != 1.0) rhs = (diagonal_power(H, q, 1.0) - diagonal_power(H, q, -1.0)) * Complex(1.0 / (q - 1.0 / q));
    r.xp_xm = sup_distance(commutator(Xp, Xm), rhs);
    return r;
}

RelationResiduals relation_residuals(const UqSu2Rep& rep) {
    return relation_residuals(rep.H(), rep.Xp(), rep.Xm(), rep.q());
}

CoproductRep coproduct_rep(const UqSu2Rep& rep) {
    const auto one = DenseMatrix::identity(rep.dimension());
    const auto k = rep.q_power_H(0.5);
    const auto kinv = rep.q_power_H(-0.5);
    return {kron(rep.H(), one) + kron(one, rep.H()), kron(rep.Xp(), k) + kron(kinv, rep.Xp()),
            kron(rep.Xm(), k) + kron(kinv, rep.Xm())};
}

CoproductRep primitive_coproduct(const UqSu2Rep& rep) {
    const auto one = DenseMatrix::identity(rep.dimension());
    return {kron(rep.H(), one) + kron(one, rep.H()), kron(rep.Xp(), one) + kron(one, rep.Xp()),
            kron(rep.Xm(), one) + kron(one, rep.Xm())};
}

std::string to_string(Generator g) {
    switch (g) {
        case Generator::H: return "H";
        case Generator::Xp: return "X+";
        case Generator::Xm: return "X-";
    }
    return "?";
}

double coassociativity_residual(const UqSu2Rep& rep, Generator g) {
    const std::size_t d = rep.dimension();
    const auto one = DenseMatrix::identity(d);
    const auto one2 = DenseMatrix::identity(d * d);
    const auto delta = coproduct_rep(rep);
    if (g == Generator::H) {
        const auto left = kron(delta.H, one) + kron(one2, rep.H());
        const auto right = kron(rep.H(), one2) + kron(one, delta.H);
        return sup_distance(left, right);
    }
    const auto& x = g == Generator::Xp ? rep.Xp() : rep.Xm();
    const auto& dx = g == Generator::Xp ? delta.Xp : delta.Xm;
    const auto k = rep.q_power_H(0.5);
    const auto kinv = rep.q_power_H(-0.5);
    const auto dk = diagonal_power(delta.H, rep.q(), 0.5);
    const auto dkinv = diagonal_power(delta.H, rep.q(), -0.5);
    const auto left = kron(dx, k) + kron(dkinv, x);
    const auto right = kron(x, dk) + kron(kinv, dx);
    return sup_distance(left, right);
}

AntipodeConvention standard_antipode(double q) { return {-q, -1.0 / q}; }

namespace {

struct Letters {
    Letter one, h, k, kinv, xp, xm;
};

Letters letters(const UqSu2Rep& rep, const AntipodeConvention& s) {
    const auto one = DenseMatrix::identity(rep.dimension());
    const auto k = rep.q_power_H(0.5);
    const auto kinv = rep.q_power_H(-0.5);
    return {{"1", one, 1.0, one},
            {"H", rep.H(), 0.0, -rep.H()},
            {"K", k, 1.0, kinv},
            {"K^-1", kinv, 1.0, k},
            {"X+", rep.Xp(), 0.0, s.s_plus * rep.Xp()},
            {"X-", rep.Xm(), 0.0, s.s_minus * rep.Xm()}};
}

double inner(const DenseMatrix& a, const DenseMatrix& b) {
    Complex s = 0.0;
    for (std::size_t i = 0; i < a.entries().size(); ++i) s += std::conj(a.entries()[i]) * b.entries()[i];
    return s.real();
}

/// Least-squares s with s·a + b ≈ 0.
Complex null_scalar(const DenseMatrix& a, const DenseMatrix& b) {
    const double aa = inner(a, a);
    if (aa == 0.0) throw DomainError("degenerate antipode equation");
    return -inner(a, b) / aa;
}

}  // namespace

std::vector<TensorTerm> coproduct_terms(const UqSu2Rep& rep, Generator g, const AntipodeConvention& s) {
    const auto l = letters(rep, s);
    switch (g) {
        case Generator::H: return {{1.0, l.h, l.one}, {1.0, l.one, l.h}};
        case Generator::Xp: return {{1.0, l.xp, l.k}, {1.0, l.kinv, l.xp}};
        case Generator::Xm: return {{1.0, l.xm, l.k}, {1.0, l.kinv, l.xm}};
    }
    return {};
}

double CounitAntipodeResiduals::max() const {
    return std::max({counit_left, counit_right, antipode_left, antipode_right});
}

CounitAntipodeResiduals counit_antipode_check(const UqSu2Rep& rep, Generator g, const AntipodeConvention& s) {
    const std::size_t d = rep.dimension();
    const auto terms = coproduct_terms(rep, g, s);
    const auto& target = g == Generator::H ? rep.H() : g == Generator::Xp ? rep.Xp() : rep.Xm();
    const Complex eps_g = 0.0;  // all three generators have zero counit
    DenseMatrix cl(d, d), cr(d, d), sl(d, d), sr(d, d);
    for (const auto& t : terms) {
        cl += t.coefficient * t.left.counit * t.right.matrix;
        cr += t.coefficient * t.right.counit * t.left.matrix;
        sl += t.coefficient * (t.left.antipode * t.right.matrix);
        sr += t.coefficient * (t.left.matrix * t.right.antipode);
    }
    const auto unit = eps_g * DenseMatrix::identity(d);
    return {sup_distance(cl, target), sup_distance(cr, target), sup_distance(sl, unit), sup_distance(sr, unit)};
}

std::pair<AntipodeConvention, AntipodeConvention> solve_antipode(const UqSu2Rep& rep) {
    const auto k = rep.q_power_H(0.5);
    const auto kinv = rep.q_power_H(-0.5);
    AntipodeConvention left{}, right{};
    // m(S⊗id): s·X K + S(K⁻¹) X = s·X K + K X.
    left.s_plus = null_scalar(rep.Xp() * k, k * rep.Xp());
    left.s_minus = null_scalar(rep.Xm() * k, k * rep.Xm());
    // m(id⊗S): X S(K) + s·K⁻¹ X = X K⁻¹ + s·K⁻¹ X.
    right.s_plus = null_scalar(kinv * rep.Xp(), rep.Xp() * kinv);
    right.s_minus = null_scalar(kinv * rep.Xm(), rep.Xm() * kinv);
    return {left, right};
}

SlopeFit classical_limit_slope(int two_j, const std::vector<double>& epsilons) {
    const auto undeformed = primitive_coproduct(UqSu2Rep::classical(two_j));
    std::vector<double> distances;
    for (double eps : epsilons) distances.push_back(sup_distance(coproduct_rep(UqSu2Rep(two_j, 1.0 + eps)).Xp, undeformed.Xp));
    return numerics::log_log_slope(epsilons, distances);
}

}  // namespace symmetria::hopf

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

#include "symmetria/spacetime/conformal.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::spacetime {

namespace {

Vec4 invert_about_origin(const Vec4& z, const char* what) {
    const double s = interval(z);
    if (std::abs(s) <= null_cone_margin) {
        std::ostringstream os;
        os << what << ": point lies on the excluded null cone (eta = " << s << ")";
        throw DomainError(os.str());
    }
    return z / s;
}

}  // namespace

ConformalMap ConformalMap::dilation(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) throw DomainError("dilation factor must be positive");
    return ConformalMap(Dilation{k});
}

ConformalMap ConformalMap::inversion(const Vec4& pivot) { return ConformalMap(Inversion{pivot}); }

Vec4 ConformalMap::apply(const Vec4& x) const {
    if (const auto* d = std::get_if<Dilation>(&kind_)) return d->k * x;
    const auto& inv = std::get<Inversion>(kind_);
    return invert_about_origin(inv.pivot - x, "inversion");
}

Vec4 ConformalMap::apply_inverse(const Vec4& y) const {
    if (const auto* d = std::get_if<Dilation>(&kind_)) return y / d->k;
    // y = z / η(z,z) with z = p − x, and z ↦ z/η(z,z) is an involution.
    const auto& inv = std::get<Inversion>(kind_);
    return inv.pivot - invert_about_origin(y, "inverse inversion");
}

PullbackFit conformal_pullback_check(const ConformalMap& map, const Vec4& y,
                                     const numerics::FDStencil& stencil) {
    if (!map.is_dilation() && std::abs(interval(y)) <= null_cone_margin)
        throw DomainError("pullback point lies on the excluded null cone");
    numerics::VectorMap inverse = [&map](std::span<const double> p) {
        const Vec4 x = map.apply_inverse(Vec4(p[0], p[1], p[2], p[3]));
        return std::vector<double>{x(0), x(1), x(2), x(3)};
    };
    const std::array<double, 4> point = {y(0), y(1), y(2), y(3)};
    const auto jac = numerics::fd_jacobian(inverse, point, stencil);
    Mat4 J;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) J(i, j) = jac(static_cast<std::size_t>(i), static_cast<std::size_t>(j)).real();
    const Mat4 eta = minkowski();
    const Mat4 metric = J.transpose() * eta * J;
    // Least squares for metric ≈ Ω² η; ⟨η, η⟩ = 4.
    const double omega2 = (metric.cwiseProduct(eta)).sum() / 4.0;
    const double residual = (metric - omega2 * eta).cwiseAbs().maxCoeff();
    return {std::sqrt(std::abs(omega2)), omega2, residual};
}

ConformalFactor ConformalFactor::constant(double c) {
    std::ostringstream os;
    os << "constant(" << c << ")";
    return {os.str(), [c](const Vec4&) { return c; }, false};
}

ConformalFactor ConformalFactor::inverse_interval() {
    return {"inverse_interval", [](const Vec4& x) { return 1.0 / interval(x); }, true};
}

ConformalFactor ConformalFactor::custom(std::string name, std::function<double(const Vec4&)> omega) {
    return {std::move(name), std::move(omega), false};
}

namespace {

using Tensor3 = std::array<std::array<std::array<double, 4>, 4>, 4>;

Mat4 rescaled_metric(const ConformalFactor& f, const Vec4& x) {
    const double omega = f.omega(x);
    return omega * omega * minkowski();
}

/// Γ^a_{bc} with metric derivatives by central differences of step h.
Tensor3 christoffel(const ConformalFactor& f, const Vec4& x, double h) {
    std::array<Mat4, 4> dg;  // dg[c](a,b) = ∂_c g_ab
    for (int c = 0; c < 4; ++c) {
        Vec4 e = Vec4::Zero();
        e(c) = h;
        dg[static_cast<std::size_t>(c)] = (rescaled_metric(f, x + e) - rescaled_metric(f, x - e)) / (2.0 * h);
    }
    const Mat4 ginv = rescaled_metric(f, x).inverse();
    Tensor3 gamma{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                double sum = 0.0;
                for (int d = 0; d < 4; ++d) {
                    sum += ginv(a, d) * (dg[static_cast<std::size_t>(b)](d, c) +
                                         dg[static_cast<std::size_t>(c)](d, b) -
                                         dg[static_cast<std::size_t>(d)](b, c));
                }
                gamma[a][b][c] = 0.5 * sum;
            }
    return gamma;
}

std::array<double, 256> riemann_at_step(const ConformalFactor& f, const Vec4& x, double h) {
    const Tensor3 gamma = christoffel(f, x, h);
    std::array<Tensor3, 4> dgamma;  // dgamma[e][a][b][c] = ∂_e Γ^a_{bc}
    for (int e = 0; e < 4; ++e) {
        Vec4 shift = Vec4::Zero();
        shift(e) = h;
        const Tensor3 plus = christoffel(f, x + shift, h);
        const Tensor3 minus = christoffel(f, x - shift, h);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c)
                    dgamma[static_cast<std::size_t>(e)][a][b][c] = (plus[a][b][c] - minus[a][b][c]) / (2.0 * h);
    }
    std::array<double, 256> riemann{};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    // R^a_{bcd} = ∂_c Γ^a_{db} − ∂_d Γ^a_{cb} + Γ^a_{ce} Γ^e_{db} − Γ^a_{de} Γ^e_{cb}
                    double value = dgamma[static_cast<std::size_t>(c)][a][d][b] -
                                   dgamma[static_cast<std::size_t>(d)][a][c][b];
                    for (int e = 0; e < 4; ++e)
                        value += gamma[a][c][e] * gamma[e][d][b] - gamma[a][d][e] * gamma[e][c][b];
                    riemann[static_cast<std::size_t>(((a * 4 + b) * 4 + c) * 4 + d)] = value;
                }
    return riemann;
}

}  // namespace

std::array<double, 256> riemann_tensor(const ConformalFactor& factor, const Vec4& x, double step) {
    if (!(step > 0.0)) throw DomainError("Riemann step must be positive");
    if (factor.needs_null_cone_check && std::abs(interval(x)) <= null_cone_margin + 4.0 * step * x.norm())
        throw DomainError("conformal factor is singular on the null cone through the origin");
    const auto coarse = riemann_at_step(factor, x, step);
    const auto fine = riemann_at_step(factor, x, 0.5 * step);
    std::array<double, 256> out{};
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
    return out;
}

double conformal_flatness_check(const ConformalFactor& factor, const Vec4& x, double step) {
    double best = 0.0;
    for (double r : riemann_tensor(factor, x, step)) best = std::max(best, std::abs(r));
    return best;
}

double fd_dalembertian(const std::function<double(const Vec4&)>& field, const Vec4& x,
                       const numerics::FDStencil& stencil) {
    numerics::RealField f = [&field](std::span<const double> p) { return field(Vec4(p[0], p[1], p[2], p[3])); };
    const std::array<double, 4> point = {x(0), x(1), x(2), x(3)};
    double sum = -numerics::fd_partial2(f, point, 0, stencil);
    for (std::size_t i = 1; i < 4; ++i) sum += numerics::fd_partial2(f, point, i, stencil);
    return sum;
}

double dalembert_dilation_check(double k, const std::function<double(const Vec4&)>& field, const Vec4& x,
                                double mass, const numerics::FDStencil& stencil) {
    if (!(k > 0.0)) throw DomainError("dilation factor must be positive");
    const double m2 = mass * mass;
    auto composed = [&](const Vec4& y) { return field(k * y); };
    const double lhs = fd_dalembertian(composed, x, stencil) + m2 * composed(x);
    const double rhs = k * k * (fd_dalembertian(field, k * x, stencil) + m2 * field(k * x));
    return std::abs(lhs - rhs);
}

}  // namespace symmetria::spacetime

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

#include "symmetria/laplace/harmonic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "symmetria/errors.hpp"

namespace symmetria::laplace {

namespace {

double norm(std::span<const double> x) {
    return std::sqrt(std::inner_product(x.begin(), x.end(), x.begin(), 0.0));
}

void require_dimension(int n) {
    if (n < 2) throw DimensionError("harmonic analysis needs dimension n >= 2");
}

/// Unit vector for hyperspherical angles θ_1..θ_{n-2}, φ.
std::vector<double> direction(std::span<const double> angles) {
    const std::size_t n = angles.size() + 1;
    std::vector<double> dir(n);
    double prod = 1.0;
    for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
        dir[k] = prod * std::cos(angles[k]);
        prod *= std::sin(angles[k]);
    }
    const double phi = angles.back();
    dir[n - 2] = prod * std::cos(phi);
    dir[n - 1] = prod * std::sin(phi);
    return dir;
}

}  // namespace

double unit_sphere_measure(int n) {
    require_dimension(n);
    const double half = 0.5 * n;
    return 2.0 * std::pow(std::numbers::pi, half) / std::tgamma(half);
}

double gamma(int n, double r) {
    require_dimension(n);
    if (!(r > 0.0)) throw DomainError("fundamental solution needs r > 0");
    if (n == 2) return std::log(1.0 / r) / (2.0 * std::numbers::pi);
    return std::pow(r, 2 - n) / ((n - 2) * unit_sphere_measure(n));
}

ScalarField fundamental_solution(int n, std::vector<double> source) {
    require_dimension(n);
    if (source.empty()) source.assign(static_cast<std::size_t>(n), 0.0);
    if (source.size() != static_cast<std::size_t>(n)) throw DimensionError("source has wrong dimension");
    return {n, [n, source](std::span<const double> x) {
                if (x.size() != source.size()) throw DimensionError("point has wrong dimension");
                double s = 0.0;
                for (std::size_t i = 0; i < x.size(); ++i) s += (x[i] - source[i]) * (x[i] - source[i]);
                return gamma(n, std::sqrt(s));
            }};
}

double outward_flux(const ScalarField& u, double radius, int nodes) {
    const int n = u.dimension;
    require_dimension(n);
    if (!(radius > 0.0)) throw DomainError("sphere radius must be positive");
    std::vector<double> polar_x, polar_w, azim_x, azim_w;
    numerics::QuadratureRule::gauss(nodes).nodes_and_weights(0.0, std::numbers::pi, polar_x, polar_w);
    numerics::QuadratureRule::gauss(nodes).nodes_and_weights(0.0, 2.0 * std::numbers::pi, azim_x, azim_w);

    const std::size_t polar_angles = static_cast<std::size_t>(n - 2);
    const numerics::FDStencil stencil(1e-3 * radius, 4);
    std::vector<std::size_t> idx(polar_angles + 1, 0);
    std::vector<double> angles(polar_angles + 1);
    double total = 0.0;
    for (;;) {
        double weight = 1.0;
        for (std::size_t k = 0; k < polar_angles; ++k) {
            angles[k] = polar_x[idx[k]];
            weight *= polar_w[idx[k]] * std::pow(std::sin(angles[k]), static_cast<double>(polar_angles - k));
        }
        angles[polar_angles] = azim_x[idx[polar_angles]];
        weight *= azim_w[idx[polar_angles]];

        const auto dir = direction(angles);
        std::vector<double> p(dir.size());
        auto radial = [&](double s) {
            for (std::size_t i = 0; i < dir.size(); ++i) p[i] = s * dir[i];
            return u(p);
        };
        total += weight * numerics::fd_derivative(radial, radius, stencil);

        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == static_cast<std::size_t>(nodes)) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return -total * std::pow(radius, n - 1);
}

double flux_through_sphere(int n, double radius, int nodes) {
    return outward_flux(fundamental_solution(n, {}), radius, nodes);
}

ScalarField kelvin_invert(const ScalarField& u, int n) {
    require_dimension(n);
    if (u.dimension != n) throw DimensionError("Kelvin transform dimension mismatch");
    auto inner = u.evaluate;
    return {n, [inner, n](std::span<const double> x) {
                const double r = norm(x);
                if (r == 0.0) throw SingularPointError("Kelvin transform is singular at the origin");
                std::vector<double> y(x.begin(), x.end());
                for (double& yi : y) yi /= r * r;
                return std::pow(r, -(n - 2)) * inner(y);
            }};
}

double exterior_family(double a, double r) {
    if (!(r > 0.0)) throw DomainError("exterior family needs r > 0");
    return 1.0 - a + a / r;
}

ScalarField exterior_field(double a) {
    return {3, [a](std::span<const double> x) { return exterior_family(a, norm(x)); }};
}

RegularityProbe probe_regular_at_origin(const ScalarField& v) {
    static constexpr double radii[] = {1e-3, 1e-5, 1e-7};
    const std::size_t n = static_cast<std::size_t>(v.dimension);
    double spread = 0.0;
    double scale = 1.0;
    for (std::size_t axis = 0; axis < n; ++axis) {
        std::vector<double> dir(n, 0.3 / std::sqrt(static_cast<double>(n)));
        dir[axis] += 1.0;
        const double len = norm(dir);
        std::vector<double> p(n);
        double first = 0.0;
        for (std::size_t i = 0; i < std::size(radii); ++i) {
            for (std::size_t j = 0; j < n; ++j) p[j] = radii[i] * dir[j] / len;
            const double value = v(p);
            if (!std::isfinite(value)) return {false, std::numeric_limits<double>::infinity()};
            if (i == 0) {
                first = value;
                scale = std::max(scale, std::abs(value));
            }
            spread = std::max(spread, std::abs(value - first));
        }
    }
    return {spread <= 1e-2 * scale, spread};
}

double symbol(std::span<const double> k) { return std::inner_product(k.begin(), k.end(), k.begin(), 0.0); }

std::vector<double> to_cartesian(PolarCoords coords, std::span<const double> point) {
    if (coords == PolarCoords::polar2d) {
        if (point.size() != 2) throw DimensionError("polar point is (r, phi)");
        return {point[0] * std::cos(point[1]), point[0] * std::sin(point[1])};
    }
    if (point.size() != 3) throw DimensionError("spherical point is (r, theta, phi)");
    const double r = point[0], th = point[1], ph = point[2];
    return {r * std::sin(th) * std::cos(ph), r * std::sin(th) * std::sin(ph), r * std::cos(th)};
}

double polar_laplacian(PolarCoords coords, const ScalarField& u, std::span<const double> point,
                       const numerics::FDStencil& stencil) {
    using numerics::fd_derivative;
    const std::size_t dim = coords == PolarCoords::polar2d ? 2 : 3;
    if (u.dimension != static_cast<int>(dim)) throw DimensionError("field dimension does not match coordinates");
    if (point.size() != dim) throw DimensionError("wrong number of coordinates");
    const double r = point[0];
    if (!(r > 4.0 * stencil.step())) throw DomainError("too close to the origin for polar differencing");

    std::vector<double> q(point.begin(), point.end());
    auto g = [&](const std::vector<double>& c) { return u(to_cartesian(coords, c)); };
    // ∂_axis of g at c.
    auto d = [&](std::vector<double> c, std::size_t axis) {
        return fd_derivative([&](double s) { c[axis] = s; return g(c); }, c[axis], stencil);
    };

    if (coords == PolarCoords::polar2d) {
        const double radial = fd_derivative([&](double s) { auto c = q; c[0] = s; return s * d(c, 0); }, r, stencil);
        const double angular =
            fd_derivative([&](double s) { auto c = q; c[1] = s; return d(c, 1) / r; }, q[1], stencil);
        return (radial + angular) / r;
    }

    const double theta = q[1];
    if (std::sin(theta) <= 0.05) throw DomainError("too close to the polar axis (sin theta <= 0.05)");
    const double radial = fd_derivative(
        [&](double s) { auto c = q; c[0] = s; return s * s * d(c, 0) * std::sin(theta); }, r, stencil);
    const double polar = fd_derivative(
        [&](double s) { auto c = q; c[1] = s; return d(c, 1) * std::sin(s); }, theta, stencil);
    const double azimuthal = fd_derivative(
        [&](double s) { auto c = q; c[2] = s; return d(c, 2) / std::sin(theta); }, q[2], stencil);
    return (radial + polar + azimuthal) / (r * r * std::sin(theta));
}

}  // namespace symmetria::laplace

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

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "sampling.hpp"
#include "symmetria/cli/suites.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/laplace/harmonic.hpp"
#include "symmetria/laplace/legendre.hpp"
#include "symmetria/numerics/finite_difference.hpp"

namespace symmetria::cli {

namespace {

using laplace::ScalarField;
using Point3 = std::array<double, 3>;

// Point at distance r from `centre` in a uniformly drawn direction (rejection from the cube).
std::vector<double> point_at_radius(SuiteContext& ctx, const std::vector<double>& centre, double r) {
    const std::size_t n = centre.size();
    std::vector<double> d(n);
    for (;;) {
        double norm2 = 0.0;
        for (auto& x : d) {
            x = ctx.uniform(-1.0, 1.0);
            norm2 += x * x;
        }
        if (norm2 < 0.01 || norm2 > 1.0) continue;
        const double s = r / std::sqrt(norm2);
        for (std::size_t i = 0; i < n; ++i) d[i] = centre[i] + s * d[i];
        return d;
    }
}

Point3 point3(SuiteContext& ctx, double rmin, double rmax) {
    const double r = ctx.uniform(rmin, rmax);
    const auto p = point_at_radius(ctx, {0.0, 0.0, 0.0}, r);
    return {p[0], p[1], p[2]};
}

double laplacian(const ScalarField& u, std::span<const double> x) { return numerics::fd_laplacian(u.evaluate, x); }

}  // namespace

void run_laplace(SuiteContext& ctx) {
    const std::string ref_gamma = "\"the so-called characteristic singularity\"";
    const std::string ref_fund = "\"fundamental solution\"";
    const std::string ref_kelvin = "\"inversion with respect to the unit sphere\"";
    const std::string ref_family = "\"u = 1/r is the only function of this family\"";
    const std::string ref_rep = "\"homogeneous polynomials\"";
    const std::string ref_legendre = "\"the standard notation for Legendre functions\"";
    const std::string ref_polar = "\"the action of the Laplacian becomes\"";
    const std::string ref_symbol = "\"the squared length of the n-component vector\"";

    ctx.check("gamma_values", ref_gamma, [&] {
        const double r1 = std::abs(laplace::gamma(3, 2.0) - 1.0 / (8.0 * std::numbers::pi));
        const double r2 = std::abs(laplace::gamma(2, 1.0));
        return ctx.within(std::max(r1, r2), 1e-12, 2);
    });

    for (int n : {2, 3, 4}) {
        ctx.check("fundamental_solution_harmonic_n" + std::to_string(n), ref_fund, [&] {
            std::vector<double> source(n);
            for (auto& s : source) s = ctx.uniform(-0.5, 0.5);
            const ScalarField u = laplace::fundamental_solution(n, source);
            double worst = 0.0;
            for (int i = 0; i < 20; ++i) {
                const auto x = point_at_radius(ctx, source, ctx.uniform(0.5, 3.0));
                worst = std::max(worst, std::abs(laplacian(u, x)));
            }
            return ctx.within(worst, 1e-5, 20);
        });
    }

    for (int n : {2, 3, 4}) {
        ctx.check("sphere_flux_n" + std::to_string(n), ref_fund, [&] {
            Json fluxes = Json::array();
            double worst = 0.0;
            for (double radius : {1.0, 5.0}) {
                const double f = laplace::flux_through_sphere(n, radius);
                fluxes.push_back({{"radius", radius}, {"flux", f}});
                worst = std::max(worst, std::abs(f - 1.0));
            }
            return ctx.within(worst, 1e-8, 2, Json{{"fluxes", fluxes}});
        });
    }

    ctx.check("kelvin_transform_harmonic", ref_kelvin, [&] {
        const std::vector<ScalarField> inputs = {
            {3, [](std::span<const double> x) { return x[0]; }},
            {3, [](std::span<const double> x) { return x[0] * x[0] - x[1] * x[1]; }},
            {3, [](std::span<const double> x) { return x[0] * x[1] * x[2] + x[2]; }},
        };
        double worst = 0.0;
        int n = 0;
        for (const auto& u : inputs) {
            const ScalarField v = laplace::kelvin_invert(u, 3);
            for (int i = 0; i < 10; ++i) {
                const Point3 x = point3(ctx, 0.7, 2.5);
                worst = std::max(worst, std::abs(laplacian(v, x)));
                ++n;
            }
        }
        return ctx.within(worst, 1e-5, n);
    });

    ctx.check("kelvin_transform_of_constants", "\"the constant function is regular at infinity in the plane\"", [&] {
        const ScalarField one3{3, [](std::span<const double>) { return 1.0; }};
        const ScalarField one2{2, [](std::span<const double>) { return 1.0; }};
        const ScalarField v3 = laplace::kelvin_invert(one3, 3);
        const ScalarField v2 = laplace::kelvin_invert(one2, 2);
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const Point3 x = point3(ctx, 0.3, 3.0);
            const double r = std::hypot(x[0], x[1], x[2]);
            worst = std::max(worst, std::abs(v3(x) - 1.0 / r));
            const std::array<double, 2> y{x[0], x[1]};
            worst = std::max(worst, std::abs(v2(y) - 1.0));
        }
        return ctx.within(worst, 1e-12, 20);
    });

    ctx.check("kelvin_involution", ref_kelvin, [&] {
        const ScalarField u{3, [](std::span<const double> x) { return std::exp(0.3 * x[0]) + x[1] * x[2] - x[2]; }};
        const ScalarField twice = laplace::kelvin_invert(laplace::kelvin_invert(u, 3), 3);
        double worst = 0.0;
        for (int i = 0; i < 20; ++i) {
            const Point3 x = point3(ctx, 0.3, 3.0);
            worst = std::max(worst, std::abs(twice(x) - u(x)));
        }
        return ctx.within(worst, 1e-10, 20);
    });

    ctx.check("kelvin_origin_rejected", ref_kelvin, [&] {
        const ScalarField u{3, [](std::span<const double> x) { return x[0]; }};
        const ScalarField v = laplace::kelvin_invert(u, 3);
        const Point3 origin{0.0, 0.0, 0.0};
        int accepted = 0;
        try {
            (void)v(origin);
            accepted = 1;
        } catch (const SingularPointError&) {
        }
        return ctx.exact(accepted);
    });

    ctx.check("exterior_family_boundary_value", ref_family, [&] {
        double worst = std::abs(laplace::exterior_family(1.0, 4.0) - 0.25);
        for (double a : {-1.0, 0.0, 0.5, 1.0, 2.5}) worst = std::max(worst, std::abs(laplace::exterior_family(a, 1.0) - 1.0));
        return ctx.within(worst, 1e-12, 6);
    });

    ctx.check("exterior_family_unique_regular_member", ref_family, [&] {
        int wrong = 0;
        Json spreads = Json::array();
        for (double a : {0.0, 0.5, 1.0, 2.0}) {
            const auto probe = laplace::probe_regular_at_origin(laplace::kelvin_invert(laplace::exterior_field(a), 3));
            wrong += probe.regular != (a == 1.0);
            spreads.push_back({{"a", a}, {"regular", probe.regular}, {"spread", probe.spread}});
        }
        return ctx.exact(wrong, 4, Json{{"probes", spreads}});
    });

    ctx.check("legendre_closed_forms", ref_legendre, [&] {
        double worst = 0.0;
        worst = std::max(worst, std::abs(laplace::legendre(1, 0, 0.3) - 0.3));
        worst = std::max(worst, std::abs(laplace::legendre(2, 0, 0.5) + 0.125));
        for (double x : {-0.9, -0.2, 0.0, 0.4, 0.8}) {
            const double s = std::sqrt(1.0 - x * x);
            worst = std::max(worst, std::abs(laplace::legendre(2, 1, x) + 3.0 * x * s));
            worst = std::max(worst, std::abs(laplace::legendre(3, 2, x) - 15.0 * x * s * s));
        }
        return ctx.within(worst, 1e-12, 12);
    });

    ctx.check("integral_rep_axis_values", ref_rep, [&] {
        const double two_pi = 2.0 * std::numbers::pi;
        double worst = std::abs(laplace::integral_rep(1, 0, {0.0, 0.0, 1.5}) - two_pi * 1.5);
        worst = std::max(worst, std::abs(laplace::integral_rep(0, 0, {0.4, -0.3, 0.2}) - two_pi));
        return ctx.within(worst, 1e-12, 2);
    });

    for (auto [n, h] : {std::pair{1, 0}, std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 2}}) {
        const std::string tag = std::to_string(n) + "_" + std::to_string(h);
        ctx.check("integral_rep_proportional_" + tag, ref_rep, [&, n = n, h = h] {
            const Point3 reference = point3(ctx, 0.5, 1.5);
            std::vector<Point3> samples;
            for (int i = 0; i < 10; ++i) samples.push_back(point3(ctx, 0.3, 2.0));
            const auto cal = laplace::calibrate_integral_rep(n, h, reference, samples);
            Json d{{"constant_re", cal.constant.real()}, {"constant_im", cal.constant.imag()}};
            return ctx.within(cal.spread, 1e-8, cal.points_used, d);
        });
    }

    ctx.check("integral_rep_homogeneity", ref_rep, [&] {
        double worst = 0.0;
        int count = 0;
        for (auto [n, h] : {std::pair{1, 0}, std::pair{2, 1}, std::pair{3, 2}}) {
            for (int i = 0; i < 5; ++i) {
                const Point3 p = point3(ctx, 0.5, 1.5);
                const double lambda = ctx.uniform(0.5, 2.0);
                const auto a = laplace::integral_rep(n, h, p);
                const auto b = laplace::integral_rep(n, h, {lambda * p[0], lambda * p[1], lambda * p[2]});
                const auto expect = std::pow(lambda, n) * a;
                if (std::abs(expect) < 1e-8) continue;
                worst = std::max(worst, std::abs(b - expect) / std::abs(expect));
                ++count;
            }
        }
        return ctx.within(worst, 1e-8, count);
    });

    ctx.check("integral_rep_azimuthal_equivariance", ref_rep, [&] {
        double worst = 0.0;
        int count = 0;
        for (auto [n, h] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{3, 2}, std::pair{3, -1}}) {
            for (int i = 0; i < 5; ++i) {
                const Point3 p = point3(ctx, 0.5, 1.5);
                const double delta = ctx.uniform(-std::numbers::pi, std::numbers::pi);
                const double c = std::cos(delta), s = std::sin(delta);
                const Point3 q{c * p[0] - s * p[1], s * p[0] + c * p[1], p[2]};
                const auto a = laplace::integral_rep(n, h, p);
                const auto b = laplace::integral_rep(n, h, q);
                const auto expect = std::polar(1.0, h * delta) * a;
                worst = std::max(worst, std::abs(b - expect) / std::max(1.0, std::abs(a)));
                ++count;
            }
        }
        return ctx.within(worst, 1e-8, count);
    });

    ctx.check("integral_rep_harmonic", ref_rep, [&] {
        double worst = 0.0;
        int count = 0;
        for (auto [n, h] : {std::pair{2, 0}, std::pair{2, 1}, std::pair{3, 2}, std::pair{4, 1}}) {
            const ScalarField re{3, [n = n, h = h](std::span<const double> x) {
                                     return laplace::integral_rep(n, h, {x[0], x[1], x[2]}).real();
                                 }};
            const ScalarField im{3, [n = n, h = h](std::span<const double> x) {
                                     return laplace::integral_rep(n, h, {x[0], x[1], x[2]}).imag();
                                 }};
            for (int i = 0; i < 3; ++i) {
                const Point3 p = point3(ctx, 0.5, 1.5);
                worst = std::max({worst, std::abs(laplacian(re, p)), std::abs(laplacian(im, p))});
                ++count;
            }
        }
        return ctx.within(worst, 1e-5, count);
    });

    ctx.check("polar_laplacian_examples", ref_polar, [&] {
        const ScalarField r2{2, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }};
        const ScalarField inv_r{3, [](std::span<const double> x) { return 1.0 / std::hypot(x[0], x[1], x[2]); }};
        const ScalarField z{3, [](std::span<const double> x) { return x[2]; }};
        const std::array<double, 2> p2{1.3, 0.4};
        const std::array<double, 3> p3{1.2, 0.8, 0.3};
        double worst = std::abs(polar_laplacian(laplace::PolarCoords::polar2d, r2, p2) - 4.0);
        worst = std::max(worst, std::abs(polar_laplacian(laplace::PolarCoords::spherical3d, inv_r, p3)));
        worst = std::max(worst, std::abs(polar_laplacian(laplace::PolarCoords::spherical3d, z, p3)));
        return ctx.within(worst, 1e-5, 3);
    });

    ctx.check("polar_matches_cartesian", ref_polar, [&] {
        const ScalarField f2{2, [](std::span<const double> x) {
                                 return x[0] * x[0] * x[0] - 2.0 * x[0] * x[1] + std::sin(x[1]);
                             }};
        const ScalarField f3{3, [](std::span<const double> x) {
                                 return x[0] * x[0] * x[2] + std::exp(0.5 * x[1]) - x[1] * x[2] * x[2];
                             }};
        double worst = 0.0;
        for (int i = 0; i < 10; ++i) {
            const std::array<double, 2> polar{ctx.uniform(0.5, 2.0), ctx.uniform(-std::numbers::pi, std::numbers::pi)};
            const auto cart2 = laplace::to_cartesian(laplace::PolarCoords::polar2d, polar);
            worst = std::max(worst, std::abs(polar_laplacian(laplace::PolarCoords::polar2d, f2, polar) - laplacian(f2, cart2)));
            const std::array<double, 3> sph{ctx.uniform(0.5, 2.0), ctx.uniform(0.3, std::numbers::pi - 0.3),
                                            ctx.uniform(-std::numbers::pi, std::numbers::pi)};
            const auto cart3 = laplace::to_cartesian(laplace::PolarCoords::spherical3d, sph);
            worst = std::max(worst, std::abs(polar_laplacian(laplace::PolarCoords::spherical3d, f3, sph) - laplacian(f3, cart3)));
        }
        return ctx.within(worst, 1e-4, 20);
    });

    ctx.check("symbol_rotation_invariance", ref_symbol, [&] {
        const std::array<double, 3> e1{1, 0, 0}, k{1, 2, 2};
        double worst = std::max(std::abs(laplace::symbol(e1) - 1.0), std::abs(laplace::symbol(k) - 9.0));
        for (int i = 0; i < 50; ++i) {
            const auto R = sampling::rotation(ctx);
            const auto v = sampling::box3(ctx, 3.0);
            const spacetime::Vec3 rv = R * v;
            const std::array<double, 3> a{v.x(), v.y(), v.z()}, b{rv.x(), rv.y(), rv.z()};
            worst = std::max(worst, std::abs(laplace::symbol(b) - laplace::symbol(a)));
        }
        return ctx.within(worst, 1e-12, 52);
    });
}

}  // namespace symmetria::cli

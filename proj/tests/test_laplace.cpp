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

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <vector>

#include "frozen_values.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/laplace/harmonic.hpp"
#include "symmetria/laplace/legendre.hpp"
#include "symmetria/numerics/finite_difference.hpp"

using namespace symmetria;
using namespace symmetria::laplace;

namespace {

constexpr double pi = std::numbers::pi;

double binom(int n, int k) {
    double c = 1.0;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

double factorial(int n) { return n <= 1 ? 1.0 : n * factorial(n - 1); }

// P_n^m from the explicit coefficients of P_n, differentiated termwise, with the
// (−1)^m (1 − x²)^{m/2} prefactor; negative orders by the mirror relation.
double legendre_series(int n, int h, double x) {
    const int m = std::abs(h);
    double d = 0.0;
    for (int k = 0; 2 * k <= n; ++k) {
        const int power = n - 2 * k;
        if (power < m) continue;
        const double c = std::pow(-1.0, k) * binom(n, k) * binom(2 * n - 2 * k, n) / std::pow(2.0, n);
        d += c * factorial(power) / factorial(power - m) * std::pow(x, power - m);
    }
    double value = std::pow(-1.0, m) * std::pow(1.0 - x * x, 0.5 * m) * d;
    if (h < 0) value *= std::pow(-1.0, m) * factorial(n - m) / factorial(n + m);
    return value;
}

ScalarField field3(double (*f)(double, double, double)) {
    return {3, [f](std::span<const double> x) { return f(x[0], x[1], x[2]); }};
}

}  // namespace

TEST_CASE("sphere measures and fundamental solution values") {
    CHECK(unit_sphere_measure(2) == doctest::Approx(2 * pi));
    CHECK(unit_sphere_measure(3) == doctest::Approx(4 * pi));
    CHECK(unit_sphere_measure(4) == doctest::Approx(2 * pi * pi));
    CHECK(gamma(3, 2.0) == doctest::Approx(1.0 / (8 * pi)).epsilon(1e-15));
    CHECK(gamma(2, 1.0) == 0.0);
    CHECK(gamma(4, 2.0) == doctest::Approx(1.0 / (2 * 2 * pi * pi * 4)).epsilon(1e-15));
    CHECK_THROWS_AS(gamma(3, 0.0), DomainError);
    CHECK_THROWS_AS(gamma(1, 1.0), DimensionError);
}

TEST_CASE("fundamental solutions are harmonic off the source") {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(-1.0, 1.0), rad(0.5, 3.0);
    for (int n : {2, 3, 4}) {
        const auto f = fundamental_solution(n, {});
        for (int i = 0; i < 20; ++i) {
            std::vector<double> x(n);
            double norm = 0.0;
            for (auto& xi : x) {
                xi = u(rng);
                norm += xi * xi;
            }
            const double r = rad(rng) / std::sqrt(norm);
            for (auto& xi : x) xi *= r;
            CHECK(std::abs(numerics::fd_laplacian(f.evaluate, x)) < 1e-6);
        }
    }
}

TEST_CASE("flux through spheres is one at every radius") {
    CHECK(std::abs(flux_through_sphere(3, 1.0) - 1.0) < 1e-8);
    CHECK(std::abs(flux_through_sphere(3, 5.0) - 1.0) < 1e-8);
    CHECK(std::abs(flux_through_sphere(2, 2.0) - 1.0) < 1e-8);
    CHECK(std::abs(flux_through_sphere(4, 0.7) - 1.0) < 1e-8);
    CHECK_THROWS_AS(flux_through_sphere(3, -1.0), DomainError);

    // A harmonic function without a source carries no flux.
    const auto lin = field3([](double x, double, double) { return x; });
    CHECK(std::abs(outward_flux(lin, 1.5, 24)) < 1e-12);
}

TEST_CASE("Kelvin transform examples") {
    const auto one3 = kelvin_invert(field3([](double, double, double) { return 1.0; }), 3);
    const double p[] = {0.3, -1.2, 0.4};
    const double r = std::sqrt(0.09 + 1.44 + 0.16);
    CHECK(one3(p) == doctest::Approx(1.0 / r).epsilon(1e-15));

    const auto one2 = kelvin_invert({2, [](std::span<const double>) { return 1.0; }}, 2);
    const double q[] = {0.3, 5.0};
    CHECK(one2(q) == 1.0);

    const auto x1 = kelvin_invert(field3([](double x, double, double) { return x; }), 3);
    CHECK(x1(p) == doctest::Approx(0.3 / (r * r * r)).epsilon(1e-14));

    std::mt19937_64 rng(10);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int i = 0; i < 10; ++i) {
        std::array<double, 3> x{u(rng), u(rng), u(rng)};
        if (std::hypot(x[0], x[1], x[2]) < 0.8) continue;
        CHECK(std::abs(numerics::fd_laplacian(x1.evaluate, x)) < 1e-5);
    }

    const double origin[] = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(one3(origin), SingularPointError);
}

TEST_CASE("exterior family and its regular member") {
    for (double a : {0.0, 0.5, 1.0, 2.0}) CHECK(exterior_family(a, 1.0) == 1.0);
    CHECK(exterior_family(1.0, 4.0) == 0.25);
    CHECK(probe_regular_at_origin(kelvin_invert(exterior_field(1.0), 3)).regular);
    CHECK_FALSE(probe_regular_at_origin(kelvin_invert(exterior_field(0.5), 3)).regular);
    CHECK_FALSE(probe_regular_at_origin(kelvin_invert(exterior_field(0.0), 3)).regular);
}

TEST_CASE("Legendre closed forms and frozen values") {
    CHECK(legendre(1, 0, 0.3) == doctest::Approx(0.3).epsilon(1e-15));
    CHECK(legendre(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    CHECK(legendre(1, 1, 0.5) == doctest::Approx(-std::sqrt(0.75)).epsilon(1e-15));
    CHECK(std::abs(legendre(2, 1, 0.3) - frozen::P_2_1_0p3) < 1e-14);
    CHECK(std::abs(legendre(3, 2, -0.4) - frozen::P_3_2_m0p4) < 1e-13);
    CHECK(std::abs(legendre(4, -2, 0.6) - frozen::P_4_m2_0p6) < 1e-15);
    CHECK(std::abs(legendre(5, 3, 0.1) - frozen::P_5_3_0p1) < 1e-12);
    CHECK(std::abs(legendre(6, 0, 0.75) - frozen::P_6_0_0p75) < 1e-15);
}

TEST_CASE("Legendre agrees with the explicit series") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int n = 0; n <= 7; ++n)
        for (int h = -n; h <= n; ++h)
            for (int i = 0; i < 5; ++i) {
                const double x = u(rng);
                const double want = legendre_series(n, h, x);
                CHECK(std::abs(legendre(n, h, x) - want) < 1e-11 * std::max(1.0, std::abs(want)));
            }
    CHECK_THROWS_AS(legendre(2, 3, 0.1), DomainError);
    CHECK_THROWS_AS(legendre(2, 1, 1.5), DomainError);
}

TEST_CASE("integral representation on the axis") {
    CHECK(std::abs(integral_rep(1, 0, {0, 0, 1.5}) - std::complex<double>(2 * pi * 1.5)) < 1e-12);
    CHECK(std::abs(integral_rep(0, 0, {0.3, -0.2, 0.9}) - std::complex<double>(2 * pi)) < 1e-12);
    CHECK(std::abs(integral_rep(0, 1, {0.3, -0.2, 0.9})) < 1e-12);
}

TEST_CASE("integral representation is a fixed multiple of the solid harmonic") {
    const std::array<double, 3> ref{0.4, 0.3, 0.5};
    const std::array<double, 3> pts[] = {{0.3, 0.5, 0.7}, {-1, 0.2, 0.4}, {0.5, -0.6, 0.1}, {1, 1, 1}, {0.2, 0.1, -0.9}};
    struct Case {
        int n, h;
        std::complex<double> c;
    };
    const Case cases[] = {{1, 0, frozen::c_1_0}, {2, 0, frozen::c_2_0}, {2, 1, frozen::c_2_1},
                          {3, 2, frozen::c_3_2}, {3, -1, frozen::c_3_m1}};
    for (const auto& c : cases) {
        CAPTURE(c.n);
        CAPTURE(c.h);
        const auto cal = calibrate_integral_rep(c.n, c.h, ref, pts);
        CHECK(std::abs(cal.constant - c.c) < 1e-10 * std::abs(c.c));
        CHECK(cal.spread < 1e-8);
        CHECK(cal.points_used >= 4);  // (1,1,1) sits on the nodal cone of P_2
    }
}

TEST_CASE("integral representation scales homogeneously") {
    const std::array<double, 3> p{0.2, -0.7, 0.4};
    for (int n : {1, 2, 3, 4}) {
        const auto a = integral_rep(n, 1, p);
        const auto b = integral_rep(n, 1, {2.5 * p[0], 2.5 * p[1], 2.5 * p[2]});
        CHECK(std::abs(b - std::pow(2.5, n) * a) < 1e-8 * std::abs(b));
    }
}

TEST_CASE("polar and spherical Laplacians") {
    const ScalarField r2{2, [](std::span<const double> x) { return x[0] * x[0] + x[1] * x[1]; }};
    const double pp[] = {1.3, 0.4};
    CHECK(std::abs(polar_laplacian(PolarCoords::polar2d, r2, pp) - 4.0) < 1e-6);

    const auto inv = field3([](double x, double y, double z) { return 1.0 / std::sqrt(x * x + y * y + z * z); });
    const double sp[] = {1.2, 0.8, 0.3};
    CHECK(std::abs(polar_laplacian(PolarCoords::spherical3d, inv, sp)) < 1e-5);
    const auto zf = field3([](double, double, double z) { return z; });
    CHECK(std::abs(polar_laplacian(PolarCoords::spherical3d, zf, sp)) < 1e-5);

    const auto c = to_cartesian(PolarCoords::spherical3d, sp);
    CHECK(c[2] == doctest::Approx(1.2 * std::cos(0.8)));
    CHECK(c[0] == doctest::Approx(1.2 * std::sin(0.8) * std::cos(0.3)));

    const double axis[] = {1.0, 0.01, 0.0};
    CHECK_THROWS_AS(polar_laplacian(PolarCoords::spherical3d, zf, axis), DomainError);
}

TEST_CASE("polar Laplacian matches the Cartesian one") {
    const auto u = field3([](double x, double y, double z) { return x * x * y - std::sin(z) + x * z; });
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> rad(0.5, 2.0), th(0.3, 2.8), ph(-3.0, 3.0);
    for (int i = 0; i < 10; ++i) {
        const double s[] = {rad(rng), th(rng), ph(rng)};
        const auto x = to_cartesian(PolarCoords::spherical3d, s);
        CHECK(std::abs(polar_laplacian(PolarCoords::spherical3d, u, s) - numerics::fd_laplacian(u.evaluate, x)) < 1e-4);
    }
}

TEST_CASE("principal symbol") {
    const double a[] = {1, 0, 0};
    const double b[] = {1, 2, 2};
    CHECK(symbol(a) == 1.0);
    CHECK(symbol(b) == 9.0);
}

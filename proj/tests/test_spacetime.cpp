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

#include "symmetria/errors.hpp"
#include "symmetria/spacetime/conformal.hpp"
#include "symmetria/spacetime/galilei.hpp"
#include "symmetria/spacetime/poincare.hpp"
#include "symmetria/spacetime/spacetime.hpp"

using namespace symmetria;
using namespace symmetria::spacetime;

namespace {

constexpr double pi = std::numbers::pi;

double gap(const SpacetimePoint& a, const SpacetimePoint& b) {
    return std::max(std::abs(a.t - b.t), (a.r - b.r).cwiseAbs().maxCoeff());
}

Mat3 random_rotation(std::mt19937_64& rng) {
    std::normal_distribution<double> n;
    std::uniform_real_distribution<double> ang(-pi, pi);
    Vec3 axis(n(rng), n(rng), n(rng));
    return rotation(axis.normalized(), ang(rng));
}

Vec3 random_vec(std::mt19937_64& rng, double scale) {
    std::uniform_real_distribution<double> u(-scale, scale);
    return {u(rng), u(rng), u(rng)};
}

// t' = γ(t − v·r), r' = r + ((γ − 1)(v·r)/v² − γ t) v, written out directly.
SpacetimePoint textbook_boost(const Vec3& v, const SpacetimePoint& p) {
    const double v2 = v.squaredNorm();
    const double g = 1.0 / std::sqrt(1.0 - v2);
    const double vr = v.dot(p.r);
    return {g * (p.t - vr), p.r + ((g - 1.0) * vr / v2 - g * p.t) * v};
}

}  // namespace

TEST_CASE("rotation classification fixtures") {
    CHECK(classify_rotation(Mat3::Identity()) == RotationClass::proper);
    CHECK(classify_rotation(Vec3(1, 1, -1).asDiagonal()) == RotationClass::improper);
    const Mat3 m = rotation(Vec3::UnitZ(), 0.3) * rotation(Vec3::UnitX(), 0.5);
    CHECK(classify_rotation(m) == RotationClass::proper);
    Mat3 sheared = Mat3::Identity();
    sheared(0, 1) = 1e-3;
    CHECK(classify_rotation(sheared) == RotationClass::not_orthogonal);
    CHECK(std::string(to_string(RotationClass::improper)) == "improper");
}

TEST_CASE("rotation is right-handed") {
    const Vec3 y = rotation(Vec3::UnitZ(), pi / 2) * Vec3::UnitX();
    CHECK((y - Vec3::UnitY()).norm() < 1e-15);
    CHECK_THROWS_AS(rotation(Vec3::Zero(), 1.0), DomainError);
}

TEST_CASE("Galilei action examples") {
    const SpacetimePoint p{1.0, Vec3(0.5, -1.0, 2.0)};
    CHECK(gap(galilei_apply(GalileiElement::identity(), p), p) == 0.0);

    const GalileiElement shift(Mat3::Identity(), Vec3::Zero(), Vec3::Zero(), 2.0);
    const auto q = galilei_apply(shift, {1.0, Vec3::Zero()});
    CHECK(q.t == 3.0);
    CHECK(q.r.norm() == 0.0);

    const GalileiElement g(rotation(Vec3::UnitZ(), pi / 2), Vec3(1, 0, 0), Vec3(0, 1, 0), 1.0);
    const auto h = galilei_apply(g, {2.0, Vec3(1, 0, 0)});
    CHECK(h.t == 3.0);
    CHECK((h.r - Vec3(2, 2, 0)).norm() < 1e-15);
}

TEST_CASE("Galilei composition, inverse and pure boosts") {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const Vec3 v1(0.1, 0.2, 0.3), v2(-0.4, 0.0, 0.5);
    const GalileiElement b1(Mat3::Identity(), v1, Vec3::Zero(), 0.0);
    const GalileiElement b2(Mat3::Identity(), v2, Vec3::Zero(), 0.0);
    CHECK((galilei_compose(b2, b1).v() - (v1 + v2)).norm() < 1e-15);

    const GalileiElement xi(Mat3::Identity(), Vec3::Zero(), Vec3(1, 2, 3), 0.0);
    CHECK((galilei_inverse(xi).xi() + Vec3(1, 2, 3)).norm() == 0.0);
    CHECK(parameter_distance(galilei_inverse(GalileiElement::identity()), GalileiElement::identity()) == 0.0);

    for (int i = 0; i < 50; ++i) {
        const GalileiElement a(random_rotation(rng), random_vec(rng, 1), random_vec(rng, 1), u(rng));
        const GalileiElement b(random_rotation(rng), random_vec(rng, 1), random_vec(rng, 1), u(rng));
        CHECK(parameter_distance(galilei_compose(galilei_inverse(a), a), GalileiElement::identity()) < 1e-12);
        CHECK(parameter_distance(galilei_compose(GalileiElement::identity(), a), a) == 0.0);
        const SpacetimePoint p{u(rng), random_vec(rng, 2)};
        CHECK(gap(galilei_apply(galilei_compose(b, a), p), galilei_apply(b, galilei_apply(a, p))) < 1e-12);
    }
}

TEST_CASE("Galilei elements need proper rotations") {
    CHECK_THROWS_AS(GalileiElement(Vec3(1, 1, -1).asDiagonal(), Vec3::Zero(), Vec3::Zero(), 0.0), DomainError);
}

TEST_CASE("Poincare boost examples") {
    const PoincareElement b(Vec3::Zero(), 0.0, Vec3(0.6, 0, 0), Mat3::Identity());
    const auto p = poincare_apply(b, {1.0, Vec3::Zero()});
    CHECK(p.t == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(p.r(0) == doctest::Approx(-0.75).epsilon(1e-15));
    CHECK(p.r.tail<2>().norm() == 0.0);

    const SpacetimePoint q{0.3, Vec3(1, 2, 3)};
    CHECK(gap(poincare_apply(PoincareElement::identity(), q), q) == 0.0);
}

TEST_CASE("boost matrix matches the textbook formula and is Lorentzian") {
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        Vec3 v = random_vec(rng, 1.0);
        if (v.norm() >= 0.95) v *= 0.9 / v.norm();
        const SpacetimePoint p{u(rng), random_vec(rng, 2)};
        const PoincareElement b(Vec3::Zero(), 0.0, v, Mat3::Identity());
        CHECK(gap(poincare_apply(b, p), textbook_boost(v, p)) < 1e-13);
        const Mat4 L = boost_matrix(v);
        CHECK((L.transpose() * minkowski() * L - minkowski()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("slow boosts stay continuous across the branch") {
    const SpacetimePoint p{0.7, Vec3(1, -2, 0.5)};
    const Vec3 dir = Vec3(1, 2, 2) / 3.0;
    const auto below = poincare_apply(PoincareElement(Vec3::Zero(), 0, 0.5 * small_boost_speed * dir, Mat3::Identity()), p);
    const auto above = poincare_apply(PoincareElement(Vec3::Zero(), 0, 2.0 * small_boost_speed * dir, Mat3::Identity()), p);
    CHECK(gap(below, above) < 1e-7);
    CHECK(gap(below, p) < 1e-7);
}

TEST_CASE("colinear boosts add relativistically") {
    const PoincareElement b(Vec3::Zero(), 0.0, Vec3(0.5, 0, 0), Mat3::Identity());
    const auto c = poincare_compose(b, b);
    CHECK((c.v() - Vec3(0.8, 0, 0)).norm() < 1e-14);
    CHECK(parameter_distance(poincare_compose(b, PoincareElement::identity()), b) < 1e-15);
}

TEST_CASE("Poincare composition acts like sequential application and preserves intervals") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    auto element = [&] {
        Vec3 v = random_vec(rng, 1.0);
        if (v.norm() >= 0.9) v *= 0.85 / v.norm();
        return PoincareElement(random_vec(rng, 1), u(rng), v, random_rotation(rng));
    };
    for (int i = 0; i < 50; ++i) {
        const auto a = element(), b = element(), c = element();
        const SpacetimePoint p{u(rng), random_vec(rng, 1)}, q{u(rng), random_vec(rng, 1)};
        CHECK(gap(poincare_apply(poincare_compose(b, a), p), poincare_apply(b, poincare_apply(a, p))) < 1e-10);
        CHECK(parameter_distance(poincare_compose(c, poincare_compose(b, a)),
                                 poincare_compose(poincare_compose(c, b), a)) < 1e-10);
        CHECK(std::abs(interval(poincare_apply(a, p), poincare_apply(a, q)) - interval(p, q)) < 1e-10);
        CHECK(parameter_distance(PoincareElement::from_affine(a.to_affine()), a) < 1e-12);
    }
}

TEST_CASE("Poincare elements reject bad parameters") {
    CHECK_THROWS_AS(PoincareElement(Vec3::Zero(), 0, Vec3(1, 0, 0), Mat3::Identity()), DomainError);
    CHECK_THROWS_AS(PoincareElement(Vec3::Zero(), 0, Vec3::Zero(), Vec3(-1, 1, 1).asDiagonal()), DomainError);
    Affine5 bad = PoincareElement::identity().to_affine();
    bad(0, 0) = 0.5;  // time column of a "boost" with |v| > 1
    bad(1, 0) = 1.0;
    CHECK_THROWS_AS(PoincareElement::from_affine(bad), CompositionError);
}

TEST_CASE("discrete inversions") {
    const auto p = discrete_apply(DiscreteOp::P, {1.0, Vec3(1, 2, 3)});
    CHECK(p.t == 1.0);
    CHECK((p.r + Vec3(1, 2, 3)).norm() == 0.0);
    const SpacetimePoint q{0.4, Vec3(-1, 0.5, 2)};
    CHECK(gap(discrete_apply(DiscreteOp::T, discrete_apply(DiscreteOp::T, q)), q) == 0.0);
    const auto pt = discrete_apply(DiscreteOp::PT, {1.0, Vec3(1, 0, 0)});
    CHECK(pt.t == -1.0);
    CHECK((pt.r - Vec3(-1, 0, 0)).norm() == 0.0);
}

TEST_CASE("dilation pullback factor") {
    for (double k : {0.5, 2.0, 3.0}) {
        const auto f = conformal_pullback_check(ConformalMap::dilation(k), Vec4(0.3, 1.0, 2.0, -1.0));
        CHECK(std::abs(f.omega_squared - 1.0 / (k * k)) < 1e-8);
        CHECK(f.residual < 1e-8);
    }
    CHECK(std::abs(conformal_pullback_check(ConformalMap::dilation(1.0), Vec4(1, 2, 3, 4)).omega - 1.0) < 1e-9);
    CHECK_THROWS_AS(ConformalMap::dilation(-1.0), DomainError);
}

TEST_CASE("inversion pullback is conformal with the inverse interval") {
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    int used = 0;
    while (used < 20) {
        const Vec4 y(u(rng), u(rng), u(rng), u(rng));
        if (std::abs(interval(y)) < 0.5) continue;
        const auto f = conformal_pullback_check(ConformalMap::inversion(), y);
        CHECK(std::abs(f.omega - 1.0 / std::abs(interval(y))) < 1e-6 * f.omega);
        CHECK(f.residual < 1e-6 * f.omega_squared);
        ++used;
    }
    const auto inv = ConformalMap::inversion(Vec4(0.1, 0.2, 0.0, -0.3));
    const Vec4 x(0.9, 2.0, -1.0, 0.5);
    CHECK((inv.apply_inverse(inv.apply(x)) - x).norm() < 1e-12);
    CHECK_THROWS_AS(ConformalMap::inversion().apply(Vec4(1, 1, 0, 0)), DomainError);
}

TEST_CASE("flatness of rescaled metrics") {
    const Vec4 x(0, 2, 0, 0);
    CHECK(conformal_flatness_check(ConformalFactor::constant(3.0), x) < 1e-4);
    CHECK(conformal_flatness_check(ConformalFactor::inverse_interval(), x) < 1e-4);
    const auto curved = ConformalFactor::custom("exp", [](const Vec4& p) { return std::exp(p(1)); });
    CHECK(conformal_flatness_check(curved, x) > 1e-2);
    CHECK_THROWS_AS(conformal_flatness_check(ConformalFactor::inverse_interval(), Vec4(1, 1, 0, 0)), DomainError);
}

TEST_CASE("d'Alembertian under dilations") {
    const Vec4 x(0.1, 0.2, 0.3, 0.4);
    auto square = [](const Vec4& p) { return p(1) * p(1); };
    CHECK(std::abs(fd_dalembertian(square, x) - 2.0) < 1e-6);
    CHECK(std::abs(fd_dalembertian([](const Vec4& p) { return p(0) * p(0); }, x) + 2.0) < 1e-6);
    CHECK(dalembert_dilation_check(3.0, square, x) < 1e-6);
    CHECK(dalembert_dilation_check(1.0, square, x) < 1e-9);
    auto wave = [](const Vec4& p) { return std::sin(p(0) - p(1)); };
    CHECK(dalembert_dilation_check(2.0, wave, x) < 1e-6);
    CHECK(dalembert_dilation_check(2.0, wave, x, 1.0) > 1e-2);
}

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
#include <cmath>
#include <numbers>

#include "sampling.hpp"
#include "symmetria/cli/suites.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/liealg/structure.hpp"
#include "symmetria/spacetime/conformal.hpp"
#include "symmetria/spacetime/galilei.hpp"
#include "symmetria/spacetime/poincare.hpp"

namespace symmetria::cli {

using spacetime::Mat3;
using spacetime::SpacetimePoint;
using spacetime::Vec3;
using spacetime::Vec4;

namespace {

constexpr int points_per_pair = 20;

double point_distance(const SpacetimePoint& a, const SpacetimePoint& b) {
    return (a.as_vector() - b.as_vector()).cwiseAbs().maxCoeff();
}

Json structure_details(const liealg::LieStructure& s, const liealg::StructureCheck& c) {
    Json d;
    d["generators"] = s.dimension();
    d["antisymmetry_defects"] = c.antisymmetry.size();
    d["jacobi_defects"] = c.jacobi.size();
    if (!c.jacobi.empty()) {
        const auto& w = c.jacobi.front();
        const auto& l = s.basis_labels();
        d["first_jacobi_triple"] = {l[w.a], l[w.b], l[w.e]};
    }
    return d;
}

void structure_checks(SuiteContext& ctx, const liealg::LieStructure& s, const std::string& ref,
                      const std::string& dim_ref) {
    ctx.check("algebra_structure_constants", ref, [&] {
        const auto c = check_structure(s);
        const double defects = static_cast<double>(c.antisymmetry.size() + c.jacobi.size());
        return ctx.exact(defects, 1, structure_details(s, c));
    });
    ctx.check("algebra_dimension", dim_ref, [&] {
        const double d = static_cast<double>(s.dimension());
        return ctx.exact(std::abs(d - 10.0), 1, Json{{"generators", s.dimension()}});
    });
}

}  // namespace

void run_rotations(SuiteContext& ctx) {
    using spacetime::RotationClass;
    const std::string ref_orth = "\"the transpose equals its inverse\"";
    const std::string ref_prod = "\"the product of two rotations is again a rotation\"";

    ctx.check("classification_fixtures", ref_orth, [&] {
        const Mat3 reflection = Vec3(1.0, 1.0, -1.0).asDiagonal();
        const Mat3 stretched = 1.1 * Mat3::Identity();
        const Mat3 product = spacetime::rotation(Vec3::UnitZ(), 0.3) * spacetime::rotation(Vec3::UnitX(), 0.5);
        int wrong = 0;
        wrong += spacetime::classify_rotation(Mat3::Identity()) != RotationClass::proper;
        wrong += spacetime::classify_rotation(reflection) != RotationClass::improper;
        wrong += spacetime::classify_rotation(stretched) != RotationClass::not_orthogonal;
        wrong += spacetime::classify_rotation(product) != RotationClass::proper;
        return ctx.exact(wrong, 4);
    });

    ctx.check("product_of_rotations_is_proper", ref_prod, [&] {
        int wrong = 0;
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const Mat3 a = sampling::rotation(ctx);
            const Mat3 b = sampling::rotation(ctx);
            const Mat3 m = a * b;
            wrong += spacetime::classify_rotation(m) != RotationClass::proper;
            worst = std::max(worst, (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff());
        }
        return ctx.exact(wrong, ctx.samples(), Json{{"max_orthogonality_defect", worst}});
    });

    ctx.check("product_orthonormality", ref_orth, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const Mat3 a = sampling::rotation(ctx);
            const Mat3 b = sampling::rotation(ctx);
            const Mat3 m = a * b;
            worst = std::max(worst, (m.transpose() * m - Mat3::Identity()).cwiseAbs().maxCoeff());
            worst = std::max(worst, std::abs(m.determinant() - 1.0));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });
}

void run_galilei(SuiteContext& ctx) {
    using namespace spacetime;
    const std::string ref_action = "\"The general Galilei transformation\"";
    const std::string ref_law = "\"The resulting group multiplication\"";

    structure_checks(ctx, liealg::galilei_algebra(), "\"commutation relations for its Lie algebra\"",
                     "\"The Galilei group is hence 10-dimensional\"");

    ctx.check("algebra_phase_space_realization", "\"generators now play a dual role\"", [&] {
        const auto r = verify_realization(liealg::galilei_algebra(), liealg::galilei_realization());
        return ctx.exact(static_cast<double>(r.mismatches.size()), static_cast<std::int64_t>(r.pairs_checked));
    });

    ctx.check("apply_hand_example", ref_action, [&] {
        const GalileiElement g(rotation(Vec3::UnitZ(), std::numbers::pi / 2), Vec3(1, 0, 0), Vec3(0, 1, 0), 1.0);
        const SpacetimePoint out = galilei_apply(g, {2.0, Vec3(1, 0, 0)});
        return ctx.within(point_distance(out, {3.0, Vec3(2, 2, 0)}), 1e-12);
    });

    ctx.check("compose_pure_boosts", ref_law, [&] {
        const GalileiElement b1(Mat3::Identity(), Vec3(0.3, -0.2, 0.1), Vec3::Zero(), 0.0);
        const GalileiElement b2(Mat3::Identity(), Vec3(-0.5, 0.4, 0.7), Vec3::Zero(), 0.0);
        const GalileiElement expect(Mat3::Identity(), Vec3(-0.2, 0.2, 0.8), Vec3::Zero(), 0.0);
        return ctx.within(parameter_distance(galilei_compose(b2, b1), expect), 1e-12);
    });

    ctx.check("compose_action_equivalence", ref_law, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const GalileiElement g1 = sampling::galilei(ctx);
            const GalileiElement g2 = sampling::galilei(ctx);
            const GalileiElement g21 = galilei_compose(g2, g1);
            for (int k = 0; k < points_per_pair; ++k) {
                const SpacetimePoint p = sampling::event(ctx);
                worst = std::max(worst, point_distance(galilei_apply(g21, p), galilei_apply(g2, galilei_apply(g1, p))));
            }
        }
        return ctx.within(worst, 1e-12, ctx.samples() * points_per_pair);
    });

    ctx.check("compose_identity", ref_law, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const GalileiElement g = sampling::galilei(ctx);
            worst = std::max(worst, parameter_distance(galilei_compose(GalileiElement::identity(), g), g));
            worst = std::max(worst, parameter_distance(galilei_compose(g, GalileiElement::identity()), g));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });

    ctx.check("inverse_composes_to_identity", ref_law, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const GalileiElement g = sampling::galilei(ctx);
            worst = std::max(worst, parameter_distance(galilei_compose(g, galilei_inverse(g)), GalileiElement::identity()));
            worst = std::max(worst, parameter_distance(galilei_compose(galilei_inverse(g), g), GalileiElement::identity()));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });

    ctx.check("compose_associativity", ref_law, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const GalileiElement g1 = sampling::galilei(ctx);
            const GalileiElement g2 = sampling::galilei(ctx);
            const GalileiElement g3 = sampling::galilei(ctx);
            worst = std::max(worst, parameter_distance(galilei_compose(galilei_compose(g3, g2), g1),
                                                       galilei_compose(g3, galilei_compose(g2, g1))));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });

    ctx.check("preserves_time_and_simultaneous_distance", ref_action, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const GalileiElement g = sampling::galilei(ctx);
            const SpacetimePoint p = sampling::event(ctx);
            const SpacetimePoint q = sampling::event(ctx);
            const SpacetimePoint gp = galilei_apply(g, p);
            const SpacetimePoint gq = galilei_apply(g, q);
            worst = std::max(worst, std::abs((gp.t - gq.t) - (p.t - q.t)));
            const SpacetimePoint s{p.t, q.r};
            const SpacetimePoint gs = galilei_apply(g, s);
            worst = std::max(worst, std::abs((gp.r - gs.r).norm() - (p.r - s.r).norm()));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });
}

void run_poincare(SuiteContext& ctx) {
    using namespace spacetime;
    const std::string ref_table = "\"bracket relations for the generators\"";
    const std::string ref_action = "\"the effect of a general transformation on (r,t)\"";
    const std::string ref_assoc = "\"a multiplication exists which is associative\"";

    structure_checks(ctx, liealg::poincare_algebra(), ref_table, "\"a Lie group with 10 parameters\"");

    ctx.check("algebra_phase_space_realization", "\"functions with the help of a Poisson bracket\"", [&] {
        const auto r = verify_realization(liealg::poincare_algebra(), liealg::poincare_realization());
        return ctx.exact(static_cast<double>(r.mismatches.size()), static_cast<std::int64_t>(r.pairs_checked));
    });

    // {J2, J3} = -J1 injected while {J1, J2} = J3 stays: the table must be rejected.
    ctx.check("mutation_bad_structure_constant_detected", ref_table, [&] {
        auto s = liealg::poincare_algebra();
        s.set_bracket(s.index_of("J2"), s.index_of("J3"), {{s.index_of("J1"), liealg::Rational(-1)}});
        const auto c = check_structure(s);
        return ctx.at_least(static_cast<double>(c.jacobi.size()), 1.0, 1, structure_details(s, c));
    });

    ctx.check("boost_hand_example", "\"transformations to frames moving in a fixed direction\"", [&] {
        const PoincareElement b(Vec3::Zero(), 0.0, Vec3(0.6, 0, 0), Mat3::Identity());
        const SpacetimePoint out = poincare_apply(b, {1.0, Vec3::Zero()});
        return ctx.within(point_distance(out, {1.25, Vec3(-0.75, 0, 0)}), 1e-12);
    });

    ctx.check("rest_frame_branch", ref_action, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const Vec3 a = sampling::box3(ctx, 1.0);
            const double b = ctx.uniform(-1.0, 1.0);
            const Mat3 R = sampling::rotation(ctx);
            const SpacetimePoint p = sampling::event(ctx);
            const SpacetimePoint out = poincare_apply(PoincareElement(a, b, Vec3::Zero(), R), p);
            worst = std::max(worst, point_distance(out, {b + p.t, a + R * p.r}));
        }
        return ctx.within(worst, 1e-12, ctx.samples());
    });

    ctx.check("colinear_velocity_addition", "\"with the convention\"", [&] {
        const PoincareElement b(Vec3::Zero(), 0.0, Vec3(0.5, 0, 0), Mat3::Identity());
        const PoincareElement expect(Vec3::Zero(), 0.0, Vec3(0.8, 0, 0), Mat3::Identity());
        return ctx.within(parameter_distance(poincare_compose(b, b), expect), 1e-12);
    });

    ctx.check("compose_action_equivalence", ref_assoc, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const PoincareElement t1 = sampling::poincare(ctx);
            const PoincareElement t2 = sampling::poincare(ctx);
            const PoincareElement t21 = poincare_compose(t2, t1);
            for (int k = 0; k < points_per_pair; ++k) {
                const SpacetimePoint p = sampling::event(ctx);
                worst = std::max(worst, point_distance(poincare_apply(t21, p), poincare_apply(t2, poincare_apply(t1, p))));
            }
        }
        return ctx.within(worst, 1e-10, ctx.samples() * points_per_pair);
    });

    ctx.check("compose_identity", ref_assoc, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const PoincareElement t = sampling::poincare(ctx);
            worst = std::max(worst, parameter_distance(poincare_compose(t, PoincareElement::identity()), t));
            worst = std::max(worst, parameter_distance(poincare_compose(PoincareElement::identity(), t), t));
        }
        return ctx.within(worst, 1e-10, ctx.samples());
    });

    ctx.check("compose_associativity", ref_assoc, [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const PoincareElement t1 = sampling::poincare(ctx);
            const PoincareElement t2 = sampling::poincare(ctx);
            const PoincareElement t3 = sampling::poincare(ctx);
            worst = std::max(worst, parameter_distance(poincare_compose(poincare_compose(t3, t2), t1),
                                                       poincare_compose(t3, poincare_compose(t2, t1))));
        }
        return ctx.within(worst, 1e-10, ctx.samples());
    });

    ctx.check("interval_preserved", "\"One still has eta(Tx,Ty)=eta(x,y)\"", [&] {
        double worst = 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const PoincareElement t = sampling::poincare(ctx);
            for (int k = 0; k < points_per_pair; ++k) {
                const SpacetimePoint p = sampling::event(ctx);
                const SpacetimePoint q = sampling::event(ctx);
                const double before = interval(p, q);
                const double after = interval(poincare_apply(t, p), poincare_apply(t, q));
                worst = std::max(worst, std::abs(after - before));
            }
        }
        return ctx.within(worst, 1e-10, ctx.samples() * points_per_pair);
    });

    ctx.check("discrete_inversions", "\"the inversion operations\"", [&] {
        int wrong = 0;
        const SpacetimePoint p{1.0, Vec3(1, 2, 3)};
        wrong += point_distance(discrete_apply(DiscreteOp::P, p), {1.0, Vec3(-1, -2, -3)}) != 0.0;
        wrong += point_distance(discrete_apply(DiscreteOp::PT, {1.0, Vec3(1, 0, 0)}), {-1.0, Vec3(-1, 0, 0)}) != 0.0;
        for (std::int64_t i = 0; i < ctx.samples(); ++i) {
            const SpacetimePoint x = sampling::event(ctx);
            for (DiscreteOp op : {DiscreteOp::P, DiscreteOp::T, DiscreteOp::PT})
                wrong += point_distance(discrete_apply(op, discrete_apply(op, x)), x) != 0.0;
            const SpacetimePoint composed = discrete_apply(DiscreteOp::T, discrete_apply(DiscreteOp::P, x));
            wrong += point_distance(composed, discrete_apply(DiscreteOp::PT, x)) != 0.0;
        }
        return ctx.exact(wrong, ctx.samples() * 4 + 2);
    });
}

void run_conformal(SuiteContext& ctx) {
    using namespace spacetime;
    const std::string ref_dilation = "\"mapping is called a dilation\"";
    const std::string ref_inversion = "\"is called an inversion\"";
    const std::string ref_flat = "\"does indeed vanish\"";
    const std::string ref_box = "\"a dilation the d'Alembert operator transforms\"";

    ctx.check("dilation_pullback_factor", ref_dilation, [&] {
        double worst = 0.0;
        int n = 0;
        Json factors = Json::array();
        for (double k : {0.5, 1.0, 2.0, 3.7}) {
            for (int i = 0; i < 5; ++i) {
                const Vec4 y = sampling::box4(ctx, 2.0);
                const PullbackFit f = conformal_pullback_check(ConformalMap::dilation(k), y);
                worst = std::max({worst, f.residual, std::abs(f.omega_squared - 1.0 / (k * k))});
                if (i == 0) factors.push_back({{"k", k}, {"omega_squared", f.omega_squared}});
                ++n;
            }
        }
        return ctx.within(worst, 1e-8, n, Json{{"fits", factors}});
    });

    ctx.check("inversion_pullback_conformal", ref_inversion, [&] {
        double worst = 0.0;
        int n = 0;
        auto probe = [&](const Vec4& y) {
            const PullbackFit f = conformal_pullback_check(ConformalMap::inversion(), y);
            worst = std::max({worst, f.residual, std::abs(std::abs(f.omega) - 1.0 / std::abs(interval(y)))});
            ++n;
        };
        probe(Vec4(2, 0, 0, 0));
        while (n < 21) {
            const Vec4 y = sampling::box4(ctx, 2.0);
            if (std::abs(interval(y)) < 0.5) continue;
            probe(y);
        }
        return ctx.within(worst, 1e-6, n);
    });

    ctx.check("inversion_null_cone_rejected", ref_inversion, [&] {
        int accepted = 0;
        for (const Vec4& y : {Vec4(1, 1, 0, 0), Vec4(2, 0, 2, 0), Vec4(0, 0, 0, 0)}) {
            try {
                (void)conformal_pullback_check(ConformalMap::inversion(), y);
                ++accepted;
            } catch (const DomainError&) {
            }
        }
        return ctx.exact(accepted, 3);
    });

    ctx.check("flatness_constant_factor", ref_flat, [&] {
        return ctx.within(conformal_flatness_check(ConformalFactor::constant(3.0), Vec4(0, 2, 0, 0)), 1e-4);
    });

    ctx.check("flatness_inverse_interval_factor", ref_flat, [&] {
        double worst = 0.0;
        for (const Vec4& x : {Vec4(0, 2, 0, 0), Vec4(0.3, 1.5, -0.4, 0.9), Vec4(3, 0.5, 0.2, -0.1)})
            worst = std::max(worst, conformal_flatness_check(ConformalFactor::inverse_interval(), x));
        return ctx.within(worst, 1e-4, 3);
    });

    ctx.check("mutation_curved_factor_detected", ref_flat, [&] {
        const auto bent = ConformalFactor::custom("exp(x1)", [](const Vec4& x) { return std::exp(x(1)); });
        return ctx.at_least(conformal_flatness_check(bent, Vec4(0, 2, 0, 0)), 1e-2);
    });

    ctx.check("dalembertian_dilation_scaling", ref_box, [&] {
        const auto field = [](const Vec4& x) { return x(1) * x(1) + 0.5 * x(0) * x(2) - x(3) * x(3) * x(0); };
        double worst = 0.0;
        int n = 0;
        for (double k : {0.5, 1.0, 2.0, 3.0}) {
            const Vec4 x = sampling::box4(ctx, 1.0);
            worst = std::max(worst, dalembert_dilation_check(k, field, x));
            ++n;
        }
        return ctx.within(worst, 1e-6, n);
    });

    ctx.check("massless_wave_survives_dilation", "\"is not invariant unless the mass\"", [&] {
        const auto wave = [](const Vec4& x) { return std::sin(x(0) - x(1)); };
        const Vec4 x(0.1, 0.2, 0.3, 0.4);
        const double box = std::abs(fd_dalembertian(wave, x));
        const double scaled = dalembert_dilation_check(2.0, wave, x);
        return ctx.within(std::max(box, scaled), 1e-6, 2);
    });

    ctx.check("mutation_massive_field_detected", "\"is not invariant unless the mass\"", [&] {
        const auto wave = [](const Vec4& x) { return std::sin(x(0) - x(1)); };
        return ctx.at_least(dalembert_dilation_check(2.0, wave, Vec4(0.1, 0.2, 0.3, 0.4), 1.0), 1e-2);
    });
}

}  // namespace symmetria::cli

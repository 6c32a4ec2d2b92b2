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

#include "symmetria/cli/suites.hpp"
#include "symmetria/hopf/planck.hpp"
#include "symmetria/hopf/uq_su2.hpp"
#include "symmetria/numerics/fit.hpp"

namespace symmetria::cli {

namespace {

using namespace hopf;

constexpr double deformations[] = {0.7, 1.3, 2.0};
constexpr int spins[] = {1, 2, 3, 4};  // 2j
constexpr Generator generators[] = {Generator::H, Generator::Xp, Generator::Xm};

DenseMatrix tensor_sum(const DenseMatrix& a) {
    const auto one = DenseMatrix::identity(a.rows());
    return kron(a, one) + kron(one, a);
}

}  // namespace

void run_hopf(SuiteContext& ctx) {
    const std::string ref_rel = "\"generators H, X+- and defining relations\"";
    const std::string ref_cop = "\"A coproduct\"";
    const std::string ref_coas = "\"coassociativity and counity axioms\"";
    const std::string ref_antipode = "\"An antipode S: H -> H such that\"";
    const std::string ref_limit = "\"which is recovered as q -> 1\"";
    const std::string ref_planck = "\"The Planck scale quantum group generated by position x and momentum p\"";

    ctx.check("relations_base_representation", ref_rel, [&] {
        double worst = 0.0;
        int n = 0;
        for (int tj : spins)
            for (double q : deformations) {
                worst = std::max(worst, relation_residuals(UqSu2Rep(tj, q)).max());
                ++n;
            }
        return ctx.within(worst, 1e-11, n);
    });

    ctx.check("relations_coproduct_representation", ref_cop, [&] {
        double worst = 0.0;
        int n = 0;
        for (int tj : spins)
            for (double q : deformations) {
                const auto d = coproduct_rep(UqSu2Rep(tj, q));
                worst = std::max(worst, relation_residuals(d.H, d.Xp, d.Xm, q).max());
                ++n;
            }
        return ctx.within(worst, 1e-11, n);
    });

    ctx.check("half_spin_commutator_is_H", ref_rel, [&] {
        double worst = 0.0;
        for (double q : deformations) {
            const UqSu2Rep r(1, q);
            worst = std::max(worst, sup_distance(commutator(r.Xp(), r.Xm()), r.H()));
        }
        return ctx.within(worst, 1e-12, 3);
    });

    ctx.check("coproduct_of_H_is_additive", ref_cop, [&] {
        double worst = 0.0;
        for (int tj : spins) {
            const UqSu2Rep r(tj, 1.3);
            worst = std::max(worst, sup_distance(coproduct_rep(r).H, tensor_sum(r.H())));
        }
        return ctx.within(worst, 1e-12, 4);
    });

    ctx.check("coassociativity", ref_coas, [&] {
        double worst = 0.0;
        int n = 0;
        for (int tj : spins)
            for (double q : deformations)
                for (Generator g : generators) {
                    worst = std::max(worst, coassociativity_residual(UqSu2Rep(tj, q), g));
                    ++n;
                }
        return ctx.within(worst, 1e-10, n);
    });

    ctx.check("coassociativity_near_classical", ref_coas, [&] {
        double worst = 0.0;
        for (Generator g : generators) worst = std::max(worst, coassociativity_residual(UqSu2Rep(2, 1.0 + 1e-8), g));
        return ctx.within(worst, 1e-7, 3);
    });

    // The standard convention must agree with the one solved from the axiom itself.
    ctx.check("antipode_convention_solved", ref_antipode, [&] {
        double worst = 0.0;
        Json solved = Json::array();
        for (double q : deformations) {
            const auto [left, right] = solve_antipode(UqSu2Rep(1, q));
            const auto std_s = standard_antipode(q);
            for (const auto& s : {left, right}) {
                worst = std::max({worst, std::abs(s.s_plus - std_s.s_plus), std::abs(s.s_minus - std_s.s_minus)});
            }
            solved.push_back({{"q", q}, {"s_plus", left.s_plus.real()}, {"s_minus", left.s_minus.real()}});
        }
        return ctx.within(worst, 1e-9, 3, Json{{"solutions", solved}});
    });

    ctx.check("counit_antipode_axioms", ref_antipode, [&] {
        double worst = 0.0;
        int n = 0;
        for (int tj : spins)
            for (double q : deformations)
                for (Generator g : generators) {
                    worst = std::max(worst, counit_antipode_check(UqSu2Rep(tj, q), g, standard_antipode(q)).max());
                    ++n;
                }
        return ctx.within(worst, 1e-11, n);
    });

    ctx.check("mutation_wrong_antipode_detected", ref_antipode, [&] {
        const double q = 1.3;
        AntipodeConvention wrong = standard_antipode(q);
        wrong.s_plus = -wrong.s_plus;
        return ctx.at_least(counit_antipode_check(UqSu2Rep(1, q), Generator::Xp, wrong).max(), 1e-3);
    });

    ctx.check("near_classical_coproduct", ref_limit, [&] {
        double worst = 0.0;
        for (int tj : spins) {
            const auto d = coproduct_rep(UqSu2Rep(tj, 1.0 + 1e-6));
            const auto p = primitive_coproduct(UqSu2Rep::classical(tj));
            worst = std::max({worst, sup_distance(d.Xp, p.Xp), sup_distance(d.Xm, p.Xm)});
        }
        return ctx.within(worst, 1e-5, 4);
    });

    // A convergence window, not a noise floor, so it does not follow --tol.
    ctx.check("classical_limit_linear_in_q", ref_limit, [&] {
        double worst = 0.0;
        Json slopes = Json::array();
        for (int tj : {1, 2, 3}) {
            const auto fit = classical_limit_slope(tj, {1e-2, 1e-3, 1e-4, 1e-5});
            slopes.push_back(fit.slope);
            worst = std::max(worst, std::abs(fit.slope - 1.0));
        }
        return Outcome{worst, 0.2, 3, Json{{"slopes", slopes}}};
    });

    ctx.check("planck_commutator", ref_planck, [&] {
        const auto ops = planck_scale_ops(256, 5.0, 1.0, 2.0);
        return ctx.within(planck_commutator_residual(ops), 1e-6, static_cast<std::int64_t>(ops.interior_end() - ops.interior_begin()));
    });

    ctx.check("planck_coproduct_homomorphism", ref_planck, [&] {
        const auto ops = planck_scale_ops(256, 5.0, 1.0, 2.0);
        return ctx.within(planck_coproduct_residual(ops), 1e-5, static_cast<std::int64_t>(probe_vectors(ops).size()));
    });

    // Eighth-order stencil: halving the spacing should cut the residual by about 2^8.
    ctx.check("planck_commutator_convergence_order", ref_planck, [&] {
        std::vector<double> sizes, residuals;
        for (int n : {64, 128, 256}) {
            sizes.push_back(n);
            residuals.push_back(planck_commutator_residual(planck_scale_ops(n, 5.0, 1.0, 2.0)));
        }
        const auto fit = numerics::log_log_slope(sizes, residuals);
        return ctx.at_least(-fit.slope, 7.2, 3, Json{{"residuals", residuals}});
    });
}

}  // namespace symmetria::cli

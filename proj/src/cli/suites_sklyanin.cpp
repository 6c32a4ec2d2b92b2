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
#include <sstream>

#include "symmetria/cli/suites.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/numerics/random.hpp"
#include "symmetria/sklyanin/algebra.hpp"
#include "symmetria/sklyanin/classical_limit.hpp"
#include "symmetria/sklyanin/rmatrix.hpp"

namespace symmetria::cli {

namespace {

using namespace sklyanin;

std::string label(double eta, double k) {
    std::ostringstream os;
    os << "eta=" << eta << ",k=" << k;
    return os.str();
}

// Largest deviation of any component from its value at the first point.
template <typename T, std::size_t N>
double spread(const std::vector<std::array<T, N>>& values) {
    double worst = 0.0;
    for (const auto& v : values)
        for (std::size_t i = 0; i < N; ++i) worst = std::max(worst, std::abs(v[i] - values.front()[i]));
    return worst;
}

}  // namespace

void run_sklyanin(SuiteContext& ctx) {
    const std::string ref_w = "\"can be expressed in terms of the Jacobi elliptic functions\"";
    const std::string ref_cybe = "\"the classical Yang-Baxter equation\"";
    const std::string ref_qybe = "\"a fixed solution R(u) of the quantum Yang-Baxter equation\"";
    const std::string ref_curve = "\"lying on the algebraic curve\"";
    const std::string ref_rll = "\"R(u-v)L'(u)L''(v)=L''(v)L'(u)R(u-v)\"";
    const std::string ref_comm = "\"the variables S_alpha are found to obey the commutation relations\"";
    const std::string ref_pauli = "\"in two dimensions, by the Pauli matrices\"";
    const std::string ref_selfadj = "\"self-adjoint representations of the algebra\"";
    const std::string ref_poisson = "\"the contraction of F with a volume element\"";
    const std::string ref_skl = "\"we get the Sklyanin bracket\"";
    const std::string ref_limit = "\"If we set eta = rho h\"";
    const std::string ref_quad = "\"the following quadratic algebra of Poisson brackets\"";

    const auto n_pairs = static_cast<std::size_t>(ctx.samples());

    ctx.check("classical_w_trigonometric_values", ref_w, [&] {
        const auto w = classical_w(std::numbers::pi / 4, ClassicalRParams(1.0, 0.0));
        double worst = std::max({std::abs(w[0] - std::sqrt(2.0)), std::abs(w[1] - std::sqrt(2.0)), std::abs(w[2] - 1.0)});
        for (double u : {0.3, 1.1, 2.5}) {
            const auto x = classical_w(u, ClassicalRParams(1.7, 0.0));
            worst = std::max(worst, std::abs(x[0] * x[0] - x[2] * x[2] - 1.7 * 1.7));
        }
        return ctx.within(worst, 1e-12, 4);
    });

    ctx.check("quadric_constancy", ref_quad, [&] {
        const ClassicalRParams p(1.0, 0.5);
        std::vector<std::array<double, 3>> c;
        for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), 20, p.k)) c.push_back(quadric_constants(classical_w(u, p)));
        return ctx.within(spread(c), 1e-10, 20, Json{{"constants", c.front()}});
    });

    ctx.check("curve_constancy", ref_curve, [&] {
        const QuantumRParams p(0.3, 0.5);
        std::vector<std::array<Complex, 3>> c;
        for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), 20, p.k)) c.push_back(curve_constants(quantum_W(u, p)));
        Json d = Json::array();
        for (const auto& z : c.front()) d.push_back({z.real(), z.imag()});
        return ctx.within(spread(c), 1e-9, 20, Json{{"constants", d}});
    });

    ctx.check("cybe_trigonometric", ref_cybe, [&] {
        return ctx.within(cybe_residual(1.1, 0.4, ClassicalRParams(1.0, 0.0)), 1e-10);
    });

    ctx.check("cybe_sweep", ref_cybe, [&] {
        const ClassicalRParams p(1.0, 0.5);
        double worst = 0.0;
        for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), n_pairs, p.k)) worst = std::max(worst, cybe_residual(u, v, p));
        return ctx.within(worst, 1e-9, ctx.samples());
    });

    ctx.check("mutation_perturbed_r_matrix_detected", ref_cybe, [&] {
        const ClassicalRParams p(1.0, 0.5);
        const RMatrixFn bent = [&](double u) {
            auto w = classical_w(u, p);
            DenseMatrix r = DenseMatrix::zeros(4, 4);
            w[0] *= 1.01;
            for (int a = 0; a < 3; ++a) r += Complex(w[a]) * kron(numerics::pauli(a + 1), numerics::pauli(a + 1));
            return r;
        };
        return ctx.at_least(cybe_residual(bent, 1.1, 0.4), 1e-3);
    });

    ctx.check("r_matrix_regular_point", ref_qybe, [&] {
        double worst = 0.0;
        for (double k : {0.0, 0.5}) worst = std::max(worst, sup_distance(quantum_R(0.0, QuantumRParams(0.3, k)), 2.0 * swap_matrix()));
        return ctx.within(worst, 1e-12, 2);
    });

    for (double k : {0.0, 0.5}) {
        ctx.check(k == 0.0 ? "qybe_sweep_trigonometric" : "qybe_sweep_elliptic", ref_qybe, [&, k] {
            const QuantumRParams p(0.3, k);
            double worst = 0.0;
            for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), n_pairs, k)) {
                const double r = qybe_residual(u, v, p);
                ctx.record_sweep(label(p.eta, k), u, v, r);
                worst = std::max(worst, r);
            }
            return ctx.within(worst, k == 0.0 ? 1e-10 : 1e-9, ctx.samples());
        });
    }

    ctx.check("rll_pauli_grid", ref_rll, [&] {
        double worst = 0.0;
        int n = 0;
        const SklyaninRep rep = rep2();
        for (double eta : {0.2, 0.3})
            for (double k : {0.0, 0.3, 0.5})
                for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), 10, k)) {
                    worst = std::max(worst, rll_residual(u, v, rep, QuantumRParams(eta, k)));
                    ++n;
                }
        return ctx.within(worst, 1e-9, n);
    });

    ctx.check("mutation_scaled_S1_detected", ref_rll, [&] {
        SklyaninRep rep = rep2();
        rep.S[1] *= 1.05;
        return ctx.at_least(rll_residual(1.1, 0.4, rep, QuantumRParams(0.3, 0.5)), 1e-3);
    });

    // Couplings read off the curve; the relation itself is not asserted for d = 3.
    ctx.check("rll_rep3_curve_couplings", ref_rll, [&] {
        const QuantumRParams p(0.3, 0.5);
        const auto J = rep3_couplings_from_curve(p);
        const SklyaninRep rep = rep3(J[0], J[1], J[2]);
        double worst = 0.0;
        for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), 10, p.k)) worst = std::max(worst, rll_residual(u, v, rep, p));
        return ctx.within(worst, 1e-9, 10, Json{{"J", J}});
    });

    ctx.check("commutation_relations_rep2", ref_pauli, [&] {
        return ctx.exact(sklyanin_residual(rep2()));
    });

    ctx.check("commutation_relations_rep3", ref_comm, [&] {
        std::vector<std::array<double, 3>> triples{{1.0, 2.0, 3.0}};
        for (int i = 0; i < 2; ++i) {
            const double a = ctx.uniform(0.5, 3.0);
            const double b = ctx.uniform(0.5, 3.0);
            const double c = ctx.uniform(0.5, 3.0);
            triples.push_back({a, b, c});
        }
        double worst = 0.0;
        for (const auto& J : triples) worst = std::max(worst, sklyanin_residual(rep3(J[0], J[1], J[2])));
        return ctx.within(worst, 1e-12, 3, Json{{"triples", triples}});
    });

    ctx.check("rep3_self_adjoint", ref_selfadj, [&] {
        double worst = self_adjointness_residual(rep3(1.0, 2.0, 3.0));
        worst = std::max(worst, self_adjointness_residual(rep3(0.7, 1.9, 1.2)));
        return ctx.within(worst, 1e-12, 2);
    });

    ctx.check("rep3_rejects_nonpositive_couplings", ref_selfadj, [&] {
        int accepted = 0;
        for (const auto& J : {std::array{0.0, 1.0, 2.0}, std::array{1.0, -2.0, 3.0}}) {
            try {
                (void)rep3(J[0], J[1], J[2]);
                ++accepted;
            } catch (const DomainError&) {
            }
        }
        return ctx.exact(accepted, 2);
    });

    ctx.check("mutation_flipped_S3_detected", ref_comm, [&] {
        SklyaninRep rep = rep3(1.0, 2.0, 3.0);
        rep.S[3] *= -1.0;
        return ctx.at_least(sklyanin_residual(rep), 1e-3);
    });

    ctx.check("poisson_tensor_jacobi", ref_poisson, [&] {
        std::size_t failures = 0, triples = 0;
        int asym = 0;
        for (int i = 0; i < 20; ++i) {
            PoissonTensorSpec spec;
            for (auto& x : spec.a) x = Rational(numerics::uniform_int(ctx.rng(), -5, 5));
            for (auto& x : spec.b) x = Rational(numerics::uniform_int(ctx.rng(), -5, 5));
            const auto report = poisson_jacobi_check(poisson_tensor(spec));
            failures += report.failures;
            triples += report.triples_checked;
            asym += !report.antisymmetric;
        }
        return ctx.exact(static_cast<double>(failures) + asym, static_cast<std::int64_t>(triples));
    });

    ctx.check("poisson_tensor_sklyanin_case", ref_skl, [&] {
        std::size_t mismatches = 0;
        for (int i = 0; i < 5; ++i) {
            const Rational a1(numerics::uniform_int(ctx.rng(), -6, 6));
            const Rational a2(numerics::uniform_int(ctx.rng(), -6, 6));
            const Rational a3(numerics::uniform_int(ctx.rng(), -6, 6));
            const PoissonTensorSpec spec{{Rational(1), a1, a2, a3}, {Rational(0), Rational(1), Rational(1), Rational(1)}};
            mismatches += bivector_mismatches(poisson_tensor(spec), sklyanin_bracket_reference(a1, a2, a3));
        }
        return ctx.exact(static_cast<double>(mismatches), 5);
    });

    ctx.check("poisson_tensor_degenerate_spec", ref_poisson, [&] {
        const PoissonTensorSpec spec{{Rational(2), Rational(-1), Rational(3), Rational(1)},
                                     {Rational(2), Rational(-1), Rational(3), Rational(1)}};
        return ctx.exact(static_cast<double>(bivector_mismatches(poisson_tensor(spec), Bivector4{})));
    });

    {
        // One probe per modulus, shared by the three slope checks.
        const std::vector<double> h{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
        std::vector<ClassicalLimitProbe> probes;
        std::string probe_error;
        try {
            for (double k : {0.0, 0.5}) probes.push_back(classical_limit_probe(0.8, ClassicalRParams(1.0, k), h));
        } catch (const std::exception& e) {
            probe_error = e.what();
        }
        const auto slope_check = [&](const std::string& name, double bound, auto pick) {
            ctx.check(name, ref_limit, [&] {
                if (!probe_error.empty()) throw ProbeError(probe_error);
                double worst = 1e300;
                Json slopes = Json::array();
                for (const auto& p : probes) {
                    const double s = pick(p).slope;
                    slopes.push_back(s);
                    worst = std::min(worst, s);
                }
                return ctx.at_least(worst, bound, static_cast<std::int64_t>(h.size() * probes.size()),
                                    Json{{"slopes", slopes}});
            });
        };
        slope_check("classical_limit_w_slope", 1.9, [](const ClassicalLimitProbe& p) { return p.w_error; });
        slope_check("classical_limit_r_slope", 1.9, [](const ClassicalLimitProbe& p) { return p.r_error; });
        slope_check("classical_limit_j_slope", 3.8, [](const ClassicalLimitProbe& p) { return p.j_error; });
    }

    ctx.check("classical_bracket_cyclic_reading", ref_quad, [&] {
        double worst = classical_sklyanin_bracket_check(ClassicalRParams(1.0, 0.0), 0.9, 0.4);
        for (const auto& [u, v] : sample_pole_free_pairs(ctx.rng(), 5, 0.5))
            worst = std::max(worst, classical_sklyanin_bracket_check(ClassicalRParams(1.0, 0.5), u, v));
        return ctx.within(worst, 1e-8, 6);
    });

    ctx.check("summed_index_reading_rejected", ref_quad, [&] {
        return ctx.at_least(classical_sklyanin_bracket_check(ClassicalRParams(1.0, 0.0), 0.9, 0.4, IndexReading::summed), 1e-3);
    });

    ctx.check("mutation_zero_bracket_detected", ref_quad, [&] {
        return ctx.at_least(classical_sklyanin_bracket_check(ClassicalRParams(1.0, 0.5), 0.9, 0.4, IndexReading::cyclic,
                                                             BracketModel::zero),
                            1e-3);
    });
}

}  // namespace symmetria::cli

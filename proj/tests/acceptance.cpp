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


// Acceptance runner: one PASS/FAIL line per criterion. Thresholds here are the
// published ones and are applied to the raw residuals, independent of the
// tolerances the suites judge themselves against.
//
//   symmetria_acceptance <path-to-symmetria-cli>

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "symmetria/cli/runner.hpp"
#include "symmetria/fullerene/automorphism.hpp"
#include "symmetria/fullerene/graph.hpp"
#include "symmetria/fullerene/matching.hpp"
#include "symmetria/liealg/structure.hpp"

namespace fs = std::filesystem;
using namespace symmetria;

namespace {

enum class Rule {
    below,           // status pass and residual < bound
    zero,            // status pass and residual == 0
    value_at_least,  // details.value >= bound
    value_above,     // details.value > bound
    passed,          // status pass
};

struct Requirement {
    std::string suite;
    std::string check;
    Rule rule;
    double bound = 0.0;
    std::int64_t min_samples = 0;
};

using Extra = std::function<void(std::vector<std::string>&)>;

struct Criterion {
    int id;
    std::string title;
    double runtime_limit_s;
    std::vector<Requirement> requirements;
    Extra extra;  // direct library assertions, optional
};

const cli::Check* find(const cli::RunResult& r, const std::string& suite, const std::string& name) {
    for (const auto& rep : r.reports) {
        if (rep.suite != suite) continue;
        for (const auto& c : rep.checks)
            if (c.name == name) return &c;
    }
    return nullptr;
}

std::string describe(const Requirement& q, const cli::Check* c) {
    std::ostringstream os;
    os << q.suite << "/" << q.check;
    if (!c) return os.str() + ": missing";
    os << ": status=" << cli::to_string(c->status);
    if (c->residual) os << " residual=" << *c->residual;
    if (c->details.contains("value")) os << " value=" << c->details["value"].dump();
    if (c->details.contains("error")) os << " error=" << c->details["error"].dump();
    return os.str();
}

bool satisfied(const Requirement& q, const cli::Check* c) {
    if (!c) return false;
    if (c->samples < q.min_samples) return false;
    const bool ok = c->status == cli::Status::pass;
    const double res = c->residual.value_or(NAN);
    auto value = [&]() -> double {
        const auto& v = c->details.value("value", cli::Json());
        return v.is_number() ? v.get<double>() : NAN;
    };
    switch (q.rule) {
        case Rule::below: return ok && res < q.bound;
        case Rule::zero: return ok && res == 0.0;
        case Rule::value_at_least: return value() >= q.bound;
        case Rule::value_above: return value() > q.bound;
        case Rule::passed: return ok;
    }
    return false;
}

// Runs the CLI through the shell and returns its exit status (-1 if it did not exit).
int run_cli(const std::string& cli, const std::string& args) {
    const std::string cmd = "'" + cli + "' " + args + " >/dev/null 2>&1";
    const int raw = std::system(cmd.c_str());
    if (raw == -1 || !WIFEXITED(raw)) return -1;
    return WEXITSTATUS(raw);
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void fullerene_direct(std::vector<std::string>& why) {
    using namespace fullerene;
    const auto g = build_truncated_icosahedron();
    const auto c = census(g);
    if (c.vertices != 60 || c.edges != 90 || c.faces != 32 || c.pentagons != 12 || c.hexagons != 20)
        why.push_back("census differs from (60, 90, 32, 12, 20)");
    if (euler_check(g) != 2) why.push_back("Euler characteristic != 2");
    if (!c.cubic) why.push_back("graph is not cubic");
    if (!isolated_pentagon_check(g).isolated) why.push_back("pentagons touch");

    const auto bonds = kekule(g);
    if (!bond_violations(g, bonds).empty()) why.push_back("Kekule assignment leaves bad vertices");
    if (bonds.double_count() != 30) why.push_back("double bond count != 30");
    const auto ef = g.edge_faces();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (bonds.bonds[e] != Bond::double_bond) continue;
        if (g.faces[ef[e][0]].size() != 6 || g.faces[ef[e][1]].size() != 6) {
            why.push_back("double bond off a hexagon-hexagon edge");
            break;
        }
    }
    if (automorphism_order(g) != 120) why.push_back("automorphism order != 120");
}

void algebra_direct(std::vector<std::string>& why) {
    for (const auto& alg : {liealg::galilei_algebra(), liealg::poincare_algebra()}) {
        if (alg.dimension() != 10) why.push_back(alg.name() + " does not have 10 generators");
        const auto chk = liealg::check_structure(alg);
        if (!chk.passed())
            why.push_back(alg.name() + ": " + std::to_string(chk.antisymmetry.size() + chk.jacobi.size()) +
                          " structure defects");
    }
}

std::vector<Criterion> criteria() {
    using R = Rule;
    std::vector<Criterion> out;
    out.push_back({1, "Lie-algebra exactness", 1.0,
                   {{"galilei", "algebra_structure_constants", R::zero},
                    {"galilei", "algebra_dimension", R::zero},
                    {"poincare", "algebra_structure_constants", R::zero},
                    {"poincare", "algebra_dimension", R::zero}},
                   algebra_direct});
    out.push_back({2, "Group-action equivalence", 2.0,
                   {{"galilei", "compose_action_equivalence", R::below, 1e-10, 2000},
                    {"poincare", "compose_action_equivalence", R::below, 1e-10, 2000},
                    {"poincare", "interval_preserved", R::below, 1e-10, 100}},
                   {}});
    out.push_back({3, "Conformal checks", 5.0,
                   {{"conformal", "dilation_pullback_factor", R::below, 1e-8},
                    {"conformal", "inversion_pullback_conformal", R::below, 1e-6},
                    {"conformal", "flatness_constant_factor", R::below, 1e-4},
                    {"conformal", "flatness_inverse_interval_factor", R::below, 1e-4},
                    {"conformal", "mutation_curved_factor_detected", R::value_above, 1e-2}},
                   {}});
    out.push_back({4, "Laplace suite", 5.0,
                   {{"laplace", "fundamental_solution_harmonic_n2", R::below, 1e-5},
                    {"laplace", "fundamental_solution_harmonic_n3", R::below, 1e-5},
                    {"laplace", "fundamental_solution_harmonic_n4", R::below, 1e-5},
                    {"laplace", "sphere_flux_n2", R::below, 1e-8, 2},
                    {"laplace", "sphere_flux_n3", R::below, 1e-8, 2},
                    {"laplace", "sphere_flux_n4", R::below, 1e-8, 2},
                    {"laplace", "kelvin_transform_harmonic", R::below, 1e-5},
                    {"laplace", "integral_rep_proportional_1_0", R::below, 1e-8},
                    {"laplace", "integral_rep_proportional_2_0", R::below, 1e-8},
                    {"laplace", "integral_rep_proportional_2_1", R::below, 1e-8},
                    {"laplace", "integral_rep_proportional_3_2", R::below, 1e-8},
                    {"laplace", "polar_matches_cartesian", R::below, 1e-4}},
                   {}});
    out.push_back({5, "Fullerene suite", 10.0,
                   {{"fullerene", "face_census", R::zero},
                    {"fullerene", "euler_characteristic", R::zero},
                    {"fullerene", "vertex_degrees", R::zero},
                    {"fullerene", "isolated_pentagon_rule", R::zero},
                    {"fullerene", "kekule_structure", R::zero},
                    {"fullerene", "automorphism_order", R::zero}},
                   fullerene_direct});
    out.push_back({6, "Hopf suite", 10.0,
                   {{"hopf", "relations_base_representation", R::below, 1e-11},
                    {"hopf", "relations_coproduct_representation", R::below, 1e-11},
                    {"hopf", "coassociativity", R::below, 1e-10},
                    {"hopf", "antipode_convention_solved", R::passed},
                    {"hopf", "counit_antipode_axioms", R::below, 1e-11},
                    {"hopf", "classical_limit_linear_in_q", R::below, 0.2},
                    {"hopf", "planck_commutator", R::below, 1e-5},
                    {"hopf", "planck_coproduct_homomorphism", R::below, 1e-5}},
                   {}});
    out.push_back({7, "Sklyanin suite", 30.0,
                   {{"sklyanin", "quadric_constancy", R::below, 1e-10},
                    {"sklyanin", "curve_constancy", R::below, 1e-9},
                    {"sklyanin", "cybe_sweep", R::below, 1e-9, 100},
                    {"sklyanin", "qybe_sweep_elliptic", R::below, 1e-9, 100},
                    {"sklyanin", "qybe_sweep_trigonometric", R::below, 1e-9, 100},
                    {"sklyanin", "rll_pauli_grid", R::below, 1e-9},
                    {"sklyanin", "commutation_relations_rep2", R::zero},
                    {"sklyanin", "commutation_relations_rep3", R::below, 1e-12, 3},
                    {"sklyanin", "poisson_tensor_jacobi", R::zero},
                    {"sklyanin", "poisson_tensor_sklyanin_case", R::zero},
                    {"sklyanin", "classical_limit_w_slope", R::value_at_least, 1.9},
                    {"sklyanin", "classical_limit_r_slope", R::value_at_least, 1.9},
                    {"sklyanin", "classical_limit_j_slope", R::value_at_least, 3.8}},
                   {}});
    out.push_back({8, "Mutation sensitivity", 5.0,
                   {{"sklyanin", "mutation_perturbed_r_matrix_detected", R::passed},
                    {"sklyanin", "mutation_flipped_S3_detected", R::passed},
                    {"fullerene", "mutation_merged_pentagons_detected", R::passed},
                    {"poincare", "mutation_bad_structure_constant_detected", R::passed}},
                   {}});
    return out;
}

bool report_line(int id, const std::string& title, double seconds, const std::vector<std::string>& why) {
    std::printf("%s  %d  %s  (%.2f s)\n", why.empty() ? "PASS" : "FAIL", id, title.c_str(), seconds);
    for (const auto& w : why) std::printf("        %s\n", w.c_str());
    std::fflush(stdout);
    return why.empty();
}

bool evaluate(const Criterion& c) {
    cli::RunConfig config;
    for (const auto& q : c.requirements) config.suites.push_back(q.suite);
    config.suites = cli::resolve_suites(config.suites);

    std::vector<std::string> why;
    const auto start = std::chrono::steady_clock::now();
    const auto result = cli::run(config);
    if (c.extra) c.extra(why);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    for (const auto& q : c.requirements) {
        const auto* check = find(result, q.suite, q.check);
        if (!satisfied(q, check)) why.push_back(describe(q, check));
    }
    if (seconds >= c.runtime_limit_s) why.push_back("runtime limit of " + std::to_string(c.runtime_limit_s) + " s exceeded");
    return report_line(c.id, c.title, seconds, why);
}

bool cli_contract(const std::string& cli) {
    std::vector<std::string> why;
    const auto start = std::chrono::steady_clock::now();
    const fs::path dir = fs::temp_directory_path() / ("symmetria-acceptance-" + std::to_string(::getpid()));
    fs::create_directories(dir);

    const auto a = dir / "a.json";
    const auto b = dir / "b.json";
    const int ra = run_cli(cli, "verify all --format json --out '" + a.string() + "'");
    const int rb = run_cli(cli, "verify all --format json --out '" + b.string() + "'");
    if (ra != 0 || rb != 0) why.push_back("verify all exited " + std::to_string(ra) + ", " + std::to_string(rb));
    const std::string ja = slurp(a);
    if (ja.empty()) why.push_back("no JSON written");
    if (ja != slurp(b)) why.push_back("two runs produced different JSON");

    struct Case {
        std::string args;
        int expect;
    };
    const std::vector<Case> cases = {
        {"verify rotations", 0},
        {"verify sklyanin --tol 1e-15", 1},
        {"verify no_such_suite", 2},
        {"verify all --samples 0", 2},
        {"verify rotations --format yaml", 2},
        {"verify rotations --out '" + (dir / "missing" / "x.json").string() + "'", 2},
    };
    for (const auto& c : cases) {
        const int got = run_cli(cli, c.args);
        if (got != c.expect)
            why.push_back("'" + c.args + "' exited " + std::to_string(got) + ", expected " + std::to_string(c.expect));
    }
    fs::remove_all(dir);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report_line(9, "CLI determinism and exit codes", seconds, why);
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::fprintf(stderr, "usage: %s <symmetria-cli>\n", argv[0]);
        return 2;
    }
    bool all = true;
    for (const auto& c : criteria()) all = evaluate(c) && all;
    all = cli_contract(argv[1]) && all;
    return all ? 0 : 1;
}

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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symmetria/cli/runner.hpp"
#include "symmetria/cli/serialize.hpp"
#include "symmetria/errors.hpp"
#include "symmetria/fullerene/matching.hpp"
#include "symmetria/liealg/structure.hpp"

namespace {

using namespace symmetria;
using namespace symmetria::cli;

constexpr int exit_usage = 2;

// SYMMETRIA_TOL sets the default; an explicit --tol always wins.
double default_tolerance() {
    const char* env = std::getenv("SYMMETRIA_TOL");
    if (env == nullptr || *env == '\0') return reference_tolerance;
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) throw UsageError(std::string("bad SYMMETRIA_TOL '") + env + "'");
    return tol;
}

void emit(const std::optional<std::string>& path, const std::string& text) {
    if (path) {
        write_file(*path, text);
    } else {
        std::cout << text;
    }
}

std::string dump_algebra() { return algebra_to_json(liealg::poincare_algebra()).dump(2) + "\n"; }

std::string dump_graph() {
    const auto g = fullerene::build_truncated_icosahedron();
    return graph_to_json(g, fullerene::kekule(g)).dump(2) + "\n";
}

std::string dump_sweep(const std::vector<SweepRecord>& sweep) { return sweep_to_json(sweep).dump(2) + "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Checks symmetry identities numerically and exactly, suite by suite."};
    app.name("symmetria");
    app.require_subcommand(1);

    RunConfig config;
    std::vector<std::string> suites;
    std::string format = "text";
    std::string out, algebra_path, graph_path, sweep_path;
    double tol = 0.0;

    auto* verify = app.add_subcommand("verify", "Run verification suites and report residuals");
    verify->add_option("suites", suites, "Suites to run: rotations galilei poincare conformal laplace fullerene hopf sklyanin all")
        ->required();
    auto* tol_opt = verify->add_option("--tol", tol, "Tolerance scale (default 1e-9, or SYMMETRIA_TOL)")->check(CLI::PositiveNumber);
    verify->add_option("--seed", config.seed, "Random seed")->capture_default_str();
    verify->add_option("--samples", config.samples, "Random samples per sweep")->check(CLI::PositiveNumber)->capture_default_str();
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    verify->add_option("--out", out, "Write the report here instead of stdout");
    verify->add_option("--dump-algebra", algebra_path, "Also write the Poincare structure table as JSON");
    verify->add_option("--export-graph", graph_path, "Also write the C60 graph with bonds as JSON");
    verify->add_option("--dump-sweep", sweep_path, "Also write Yang-Baxter sweep residuals as JSON");
    verify->add_flag("--timings", config.timings, "Record wall-clock milliseconds per check (breaks byte-identical output)");

    std::string kind, dump_out;
    auto* dump = app.add_subcommand("dump", "Write a JSON artifact");
    dump->add_option("kind", kind, "algebra, graph or sweep")->required()->check(CLI::IsMember({"algebra", "graph", "sweep"}));
    dump->add_option("--out", dump_out, "Output path")->required();

    std::string element_path;
    std::vector<double> event;
    auto* apply = app.add_subcommand("apply", "Apply a Galilei or Poincare element (JSON file) to an event t x y z");
    apply->add_option("--element", element_path, "Element JSON file")->required()->check(CLI::ExistingFile);
    apply->add_option("--event", event, "Event coordinates t x y z")->required()->expected(4);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (verify->parsed()) {
            config.suites = suites;
            config.tol = tol_opt->count() > 0 ? tol : default_tolerance();
            config.format = format == "json" ? Format::json : Format::text;
            if (!out.empty()) config.out = out;
            if (!algebra_path.empty()) config.dump_algebra = algebra_path;
            if (!graph_path.empty()) config.export_graph = graph_path;
            if (!sweep_path.empty()) config.dump_sweep = sweep_path;
            config.suites = resolve_suites(config.suites);

            const RunResult result = run(config);
            const std::string text = config.format == Format::json ? report_document(config, result).dump(2) + "\n"
                                                                   : format_text(result.reports);
            emit(config.out, text);
            if (config.dump_algebra) write_file(*config.dump_algebra, dump_algebra());
            if (config.export_graph) write_file(*config.export_graph, dump_graph());
            if (config.dump_sweep) write_file(*config.dump_sweep, dump_sweep(result.sweep));
            return result.all_passed() ? 0 : 1;
        }
        if (dump->parsed()) {
            if (kind == "algebra") {
                write_file(dump_out, dump_algebra());
            } else if (kind == "graph") {
                write_file(dump_out, dump_graph());
            } else {
                RunConfig sweep_config;
                sweep_config.suites = {"sklyanin"};
                write_file(dump_out, dump_sweep(run(sweep_config).sweep));
            }
            return 0;
        }
        if (apply->parsed()) {
            std::ifstream in(element_path);
            const Json j = Json::parse(in, nullptr, false);
            if (j.is_discarded()) throw UsageError("element file is not valid JSON");
            const auto p = spacetime::SpacetimePoint::from_vector({event[0], event[1], event[2], event[3]});
            spacetime::SpacetimePoint q;
            if (j.contains("galilei")) {
                q = spacetime::galilei_apply(galilei_from_json(j), p);
            } else if (j.contains("poincare")) {
                q = spacetime::poincare_apply(poincare_from_json(j), p);
            } else {
                throw UsageError("element must have a 'galilei' or 'poincare' key");
            }
            std::cout << Json{{"t", q.t}, {"r", {q.r.x(), q.r.y(), q.r.z()}}}.dump() << "\n";
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "symmetria: " << e.what() << "\n";
        return exit_usage;
    } catch (const IoError& e) {
        std::cerr << "symmetria: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParameterError& e) {
        std::cerr << "symmetria: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}

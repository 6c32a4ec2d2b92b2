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

#include "symmetria/cli/runner.hpp"

#include <algorithm>
#include <future>
#include <map>

#include "symmetria/cli/suites.hpp"
#include "symmetria/errors.hpp"

namespace symmetria::cli {

namespace {

using SuiteFn = void (*)(SuiteContext&);

const std::map<std::string, SuiteFn>& registry() {
    static const std::map<std::string, SuiteFn> table = {
        {"conformal", run_conformal}, {"fullerene", run_fullerene}, {"galilei", run_galilei},
        {"hopf", run_hopf},           {"laplace", run_laplace},     {"poincare", run_poincare},
        {"rotations", run_rotations}, {"sklyanin", run_sklyanin},
    };
    return table;
}

struct SuiteOutput {
    CheckReport report;
    std::vector<SweepRecord> sweep;
};

SuiteOutput run_one(const RunConfig& config, const std::string& name) {
    SuiteContext ctx(config, name);
    registry().at(name)(ctx);
    return {ctx.take_report(), ctx.take_sweep()};
}

}  // namespace

const std::vector<std::string>& known_suites() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry()) out.push_back(name);
        return out;
    }();
    return names;
}

std::vector<std::string> resolve_suites(const std::vector<std::string>& names) {
    if (names.empty()) throw UsageError("no suite given");
    std::vector<std::string> out;
    for (const auto& n : names) {
        if (n == "all") {
            out.insert(out.end(), known_suites().begin(), known_suites().end());
        } else if (registry().count(n)) {
            out.push_back(n);
        } else {
            throw UsageError("unknown suite '" + n + "'");
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool RunResult::all_passed() const {
    for (const auto& r : reports)
        if (r.summary().failed > 0) return false;
    return true;
}

RunResult run(const RunConfig& config) {
    if (!(config.tol > 0.0)) throw UsageError("tolerance must be positive");
    if (config.samples < 1) throw UsageError("samples must be at least 1");
    const auto names = resolve_suites(config.suites);

    // Each suite draws from its own named stream, so running them concurrently
    // does not change any number in the report.
    std::vector<std::future<SuiteOutput>> pending;
    for (const auto& name : names) pending.push_back(std::async(std::launch::async, run_one, std::cref(config), name));

    RunResult result;
    for (auto& f : pending) {
        SuiteOutput out = f.get();
        result.reports.push_back(std::move(out.report));
        result.sweep.insert(result.sweep.end(), out.sweep.begin(), out.sweep.end());
    }
    return result;
}

Json report_document(const RunConfig& config, const RunResult& result) {
    Json cfg;
    cfg["suites"] = resolve_suites(config.suites);
    cfg["tol"] = config.tol;
    cfg["seed"] = config.seed;
    cfg["samples"] = config.samples;
    cfg["timings"] = config.timings;
    Json reports = Json::array();
    for (const auto& r : result.reports) reports.push_back(to_json(r));
    Json doc;
    doc["version"] = "1";
    doc["config"] = std::move(cfg);
    doc["reports"] = std::move(reports);
    return doc;
}

}  // namespace symmetria::cli

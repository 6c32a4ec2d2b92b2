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
#include <exception>

#include "symmetria/cli/suites.hpp"
#include "symmetria/numerics/random.hpp"

namespace symmetria::cli {

SuiteContext::SuiteContext(const RunConfig& config, std::string suite)
    : config_(config),
      rng_(numerics::seeded_engine(config.seed, suite)),
      scale_(config.tol / reference_tolerance) {
    report_.suite = std::move(suite);
}

double SuiteContext::uniform(double lo, double hi) { return numerics::uniform(rng_, lo, hi); }

Outcome SuiteContext::within(double residual, double tolerance, std::int64_t samples, Json details) const {
    return {residual, tolerance * scale_, samples, std::move(details)};
}

Outcome SuiteContext::exact(double mismatches, std::int64_t samples, Json details) const {
    return {mismatches, 0.0, samples, std::move(details)};
}

Outcome SuiteContext::at_least(double value, double bound, std::int64_t samples, Json details) const {
    details["value"] = value;
    details["bound"] = bound;
    // NaN compares false, so std::max would hide it; keep it visible instead.
    const double shortfall = std::isnan(value) ? value : std::max(0.0, bound - value);
    return {shortfall, 0.0, samples, std::move(details)};
}

void SuiteContext::check(const std::string& name, const std::string& paper_ref,
                         const std::function<Outcome()>& body) {
    Check c;
    c.name = name;
    c.paper_ref = paper_ref;
    const auto start = std::chrono::steady_clock::now();
    try {
        Outcome o = body();
        c.residual = o.residual;
        c.tolerance = o.tolerance;
        c.samples = o.samples;
        c.details = std::move(o.details);
        c.status = judge(c.residual, c.tolerance);
    } catch (const std::exception& e) {
        c.status = Status::fail;
        c.details = Json::object();
        c.details["error"] = e.what();
    }
    if (config_.timings) {
        c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
    }
    report_.checks.push_back(std::move(c));
}

void SuiteContext::record_sweep(std::string label, double u, double v, double residual) {
    sweep_.push_back({std::move(label), u, v, residual});
}

CheckReport SuiteContext::take_report() {
    report_.sort_checks();
    return std::move(report_);
}

std::vector<SweepRecord> SuiteContext::take_sweep() { return std::move(sweep_); }

}  // namespace symmetria::cli

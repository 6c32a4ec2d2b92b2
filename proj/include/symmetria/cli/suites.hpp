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

#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "symmetria/cli/report.hpp"
#include "symmetria/cli/runner.hpp"

namespace symmetria::cli {

/// Result of one check body before status is decided.
struct Outcome {
    double residual;
    double tolerance;
    std::int64_t samples = 1;
    Json details = Json::object();
};

/// Per-suite state: its own random stream, the tolerance scale and the report.
class SuiteContext {
public:
    SuiteContext(const RunConfig& config, std::string suite);

    const RunConfig& config() const noexcept { return config_; }
    std::mt19937_64& rng() noexcept { return rng_; }
    double uniform(double lo, double hi);
    std::int64_t samples() const noexcept { return config_.samples; }

    /// Numerical residual against a tolerance that scales with --tol.
    Outcome within(double residual, double tolerance, std::int64_t samples = 1, Json details = Json::object()) const;
    /// Count of exact mismatches; tolerance zero.
    Outcome exact(double mismatches, std::int64_t samples = 1, Json details = Json::object()) const;
    /// Passes when value ≥ bound; the residual is the shortfall.
    Outcome at_least(double value, double bound, std::int64_t samples = 1, Json details = Json::object()) const;

    /// Runs a check body, timing it and turning exceptions into failures.
    void check(const std::string& name, const std::string& paper_ref, const std::function<Outcome()>& body);

    void record_sweep(std::string label, double u, double v, double residual);

    CheckReport take_report();
    std::vector<SweepRecord> take_sweep();

private:
    const RunConfig& config_;
    std::mt19937_64 rng_;
    double scale_;
    CheckReport report_;
    std::vector<SweepRecord> sweep_;
};

void run_rotations(SuiteContext& ctx);
void run_galilei(SuiteContext& ctx);
void run_poincare(SuiteContext& ctx);
void run_conformal(SuiteContext& ctx);
void run_laplace(SuiteContext& ctx);
void run_fullerene(SuiteContext& ctx);
void run_hopf(SuiteContext& ctx);
void run_sklyanin(SuiteContext& ctx);

}  // namespace symmetria::cli

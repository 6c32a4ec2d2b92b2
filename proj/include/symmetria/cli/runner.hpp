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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symmetria/cli/report.hpp"

namespace symmetria::cli {

enum class Format { text, json };

struct RunConfig {
    std::vector<std::string> suites;  // after expansion of "all", sorted and unique
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::int64_t samples = 100;
    Format format = Format::text;
    std::optional<std::string> out;
    bool timings = false;
    std::optional<std::string> dump_algebra;
    std::optional<std::string> export_graph;
    std::optional<std::string> dump_sweep;
};

/// Per-check limits are quoted relative to this; --tol rescales them.
inline constexpr double reference_tolerance = 1e-9;

const std::vector<std::string>& known_suites();

/// Expands "all", removes duplicates, sorts. UsageError on an unknown name.
std::vector<std::string> resolve_suites(const std::vector<std::string>& names);

struct SweepRecord {
    std::string label;
    double u;
    double v;
    double residual;
};

struct RunResult {
    std::vector<CheckReport> reports;
    std::vector<SweepRecord> sweep;
    bool all_passed() const;
};

RunResult run(const RunConfig& config);

/// {version, config, reports}; deterministic for a fixed config.
Json report_document(const RunConfig& config, const RunResult& result);

}  // namespace symmetria::cli

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

#include <json.hpp>

namespace symmetria::cli {

using Json = nlohmann::json;

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

struct Check {
    std::string name;
    std::string paper_ref;
    Status status = Status::skipped;
    std::optional<double> residual;
    std::optional<double> tolerance;
    std::int64_t samples = 0;
    std::int64_t elapsed_ms = 0;
    Json details = Json::object();
};

struct Summary {
    std::size_t total = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
};

struct CheckReport {
    std::string suite;
    std::vector<Check> checks;

    Summary summary() const;
    /// Checks ordered by name (stable for equal names).
    void sort_checks();
};

/// fail iff residual > tolerance; a missing or non-finite residual fails.
Status judge(std::optional<double> residual, std::optional<double> tolerance);

Json to_json(const Check& c);
Json to_json(const CheckReport& r);

/// Human-readable report, grouped by suite, residuals to 6 significant digits.
std::string format_text(const std::vector<CheckReport>& reports);

}  // namespace symmetria::cli

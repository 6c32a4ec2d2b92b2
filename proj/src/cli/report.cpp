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

#include "symmetria/cli/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

namespace symmetria::cli {

const char* to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::skipped: return "skipped";
    }
    return "skipped";
}

Summary CheckReport::summary() const {
    Summary s;
    s.total = checks.size();
    for (const auto& c : checks) {
        if (c.status == Status::pass) ++s.passed;
        if (c.status == Status::fail) ++s.failed;
    }
    return s;
}

void CheckReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const Check& a, const Check& b) { return a.name < b.name; });
}

Status judge(std::optional<double> residual, std::optional<double> tolerance) {
    if (!residual || !tolerance) return Status::fail;
    if (!std::isfinite(*residual)) return Status::fail;
    return *residual > *tolerance ? Status::fail : Status::pass;
}

namespace {

Json number_or_null(const std::optional<double>& x) {
    if (!x || !std::isfinite(*x)) return nullptr;
    return *x;
}

std::string g6(const std::optional<double>& x) {
    if (!x) return "null";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", *x);
    return buf;
}

}  // namespace

Json to_json(const Check& c) {
    Json j;
    j["name"] = c.name;
    j["paper_ref"] = c.paper_ref;
    j["status"] = to_string(c.status);
    j["residual"] = number_or_null(c.residual);
    j["tolerance"] = number_or_null(c.tolerance);
    j["samples"] = c.samples;
    j["elapsed_ms"] = c.elapsed_ms;
    j["details"] = c.details;
    return j;
}

Json to_json(const CheckReport& r) {
    CheckReport sorted = r;
    sorted.sort_checks();
    Json checks = Json::array();
    for (const auto& c : sorted.checks) checks.push_back(to_json(c));
    const Summary s = r.summary();
    Json j;
    j["suite"] = r.suite;
    j["checks"] = std::move(checks);
    j["summary"] = {{"total", s.total}, {"passed", s.passed}, {"failed", s.failed}};
    return j;
}

std::string format_text(const std::vector<CheckReport>& reports) {
    std::ostringstream os;
    Summary all;
    for (const auto& report : reports) {
        CheckReport sorted = report;
        sorted.sort_checks();
        const Summary s = sorted.summary();
        all.total += s.total;
        all.passed += s.passed;
        all.failed += s.failed;
        os << "== " << sorted.suite << " (" << s.passed << "/" << s.total << " passed)\n";
        for (const auto& c : sorted.checks) {
            std::string tag = c.status == Status::pass ? "PASS" : c.status == Status::fail ? "FAIL" : "SKIP";
            os << "  " << tag << "  " << c.name << "  residual=" << g6(c.residual)
               << " tol=" << g6(c.tolerance) << " samples=" << c.samples;
            if (c.elapsed_ms > 0) os << " ms=" << c.elapsed_ms;
            os << "\n";
            if (c.details.contains("error")) os << "        error: " << c.details["error"].get<std::string>() << "\n";
        }
    }
    os << "total " << all.total << ", passed " << all.passed << ", failed " << all.failed << "\n";
    return os.str();
}

}  // namespace symmetria::cli

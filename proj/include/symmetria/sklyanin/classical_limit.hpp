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

#include <vector>

#include "symmetria/sklyanin/rmatrix.hpp"

namespace symmetria::sklyanin {

struct LimitSeries {
    std::vector<double> errors;
    double slope;
};

struct ClassicalLimitProbe {
    std::vector<double> h;
    LimitSeries w_error;  // max_α |W_α(η = ρh) − i h w_α|
    LimitSeries r_error;  // sup |R(u) − 1 − i h r(u)|
    LimitSeries j_error;  // max |𝐉_{αβ}(η = ρh) − h² J_{αβ}|
};

/// Fits the three error series against h in log-log. ProbeError if an
/// evaluation hits a pole or an error underflows to zero.
ClassicalLimitProbe classical_limit_probe(double u, const ClassicalRParams& base, const std::vector<double>& h);

/// How the β, γ indices of {S_α, S₀} are read.
enum class IndexReading { cyclic, summed };

/// Which bracket table to use; `zero` is a control with all brackets zero.
enum class BracketModel { sklyanin, zero };

/// Expands {L′(u), L″(v)} − [r(u−v), L′(u)L″(v)] entrywise as polynomials in
/// S₀..S₃ and returns the largest coefficient.
double classical_sklyanin_bracket_check(const ClassicalRParams& p, double u, double v,
                                        IndexReading reading = IndexReading::cyclic,
                                        BracketModel model = BracketModel::sklyanin);

}  // namespace symmetria::sklyanin

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

namespace symmetria::numerics {

struct SlopeFit {
    double slope;
    std::vector<double> abscissae;  // log10 x
    std::vector<double> values;     // log10 y
};

/// Least-squares slope of log y against log x. Needs positive samples.
SlopeFit log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace symmetria::numerics

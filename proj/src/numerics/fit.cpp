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

#include "symmetria/numerics/fit.hpp"

#include <cmath>

#include "symmetria/errors.hpp"

namespace symmetria::numerics {

SlopeFit log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw DimensionError("slope fit needs matching samples (>= 2)");
    SlopeFit fit{0.0, {}, {}};
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0) || !(y[i] > 0.0)) throw DomainError("log-log fit needs positive samples");
        fit.abscissae.push_back(std::log10(x[i]));
        fit.values.push_back(std::log10(y[i]));
    }
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += fit.abscissae[i];
        sy += fit.values[i];
        sxx += fit.abscissae[i] * fit.abscissae[i];
        sxy += fit.abscissae[i] * fit.values[i];
    }
    fit.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return fit;
}

}  // namespace symmetria::numerics

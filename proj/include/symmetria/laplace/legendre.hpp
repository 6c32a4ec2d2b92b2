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

#include <array>
#include <complex>
#include <span>

#include "symmetria/numerics/quadrature.hpp"

namespace symmetria::laplace {

/// Associated Legendre function P_n^h(x) with the Condon-Shortley phase.
/// Negative h is accepted; |h| > n throws DomainError.
double legendre(int n, int h, double x);

/// ∫_{−π}^{π} (z + i x cos t + i y sin t)^n e^{iht} dt.
std::complex<double> integral_rep(int n, int h, const std::array<double, 3>& point,
                                  const numerics::QuadratureRule& rule = numerics::default_rule());

/// r^n e^{ihφ} P_n^h(cos θ).
std::complex<double> solid_harmonic(int n, int h, const std::array<double, 3>& point);

struct Calibration {
    std::complex<double> constant;  // ratio at the reference point
    double spread;                  // max relative deviation of the ratio elsewhere
    int points_used;
};

/// Calibrates integral_rep against solid_harmonic at `reference`, then measures
/// how far the ratio drifts over `samples`. Points where the harmonic nearly
/// vanishes are skipped.
Calibration calibrate_integral_rep(int n, int h, const std::array<double, 3>& reference,
                                   std::span<const std::array<double, 3>> samples,
                                   const numerics::QuadratureRule& rule = numerics::default_rule());

}  // namespace symmetria::laplace

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

#include "symmetria/laplace/legendre.hpp"

#include <cmath>
#include <numbers>

#include "symmetria/errors.hpp"

namespace symmetria::laplace {

double legendre(int n, int h, double x) {
    if (n < 0) throw DomainError("Legendre degree must be nonnegative");
    if (std::abs(h) > n) throw DomainError("Legendre order must satisfy |h| <= n");
    if (!(x >= -1.0 && x <= 1.0)) throw DomainError("Legendre argument must lie in [-1, 1]");
    const int m = std::abs(h);

    // P_m^m = (−1)^m (2m−1)!! (1−x²)^{m/2}, then upward in degree.
    double pmm = 1.0;
    const double s = std::sqrt((1.0 - x) * (1.0 + x));
    for (int i = 1; i <= m; ++i) pmm *= -(2.0 * i - 1.0) * s;
    double value = pmm;
    if (n > m) {
        double prev = pmm;
        double cur = x * (2.0 * m + 1.0) * pmm;
        for (int l = m + 2; l <= n; ++l) {
            const double next = ((2.0 * l - 1.0) * x * cur - (l + m - 1.0) * prev) / (l - m);
            prev = cur;
            cur = next;
        }
        value = cur;
    }
    if (h < 0) {
        // P_n^{−m} = (−1)^m (n−m)!/(n+m)! P_n^m
        double ratio = 1.0;
        for (int i = n - m + 1; i <= n + m; ++i) ratio /= i;
        value *= (m % 2 ? -1.0 : 1.0) * ratio;
    }
    return value;
}

std::complex<double> integral_rep(int n, int h, const std::array<double, 3>& point,
                                  const numerics::QuadratureRule& rule) {
    if (n < 0) throw DomainError("integral representation needs n >= 0");
    const auto [x, y, z] = point;
    const std::complex<double> i(0.0, 1.0);
    return numerics::integrate_periodic(
        [&](double t) { return std::pow(z + i * x * std::cos(t) + i * y * std::sin(t), n) * std::exp(i * (h * t)); },
        -std::numbers::pi, std::numbers::pi, rule);
}

std::complex<double> solid_harmonic(int n, int h, const std::array<double, 3>& point) {
    const auto [x, y, z] = point;
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r == 0.0) return n == 0 ? 1.0 : 0.0;
    const double phi = std::atan2(y, x);
    return std::pow(r, n) * std::polar(1.0, h * phi) * legendre(n, h, std::clamp(z / r, -1.0, 1.0));
}

Calibration calibrate_integral_rep(int n, int h, const std::array<double, 3>& reference,
                                   std::span<const std::array<double, 3>> samples,
                                   const numerics::QuadratureRule& rule) {
    const auto ref_basis = solid_harmonic(n, h, reference);
    if (std::abs(ref_basis) < 1e-8) throw DomainError("reference point is a zero of the solid harmonic");
    const auto c = integral_rep(n, h, reference, rule) / ref_basis;
    Calibration cal{c, 0.0, 0};
    for (const auto& p : samples) {
        const double r = std::hypot(p[0], p[1], p[2]);
        const auto basis = solid_harmonic(n, h, p);
        if (std::abs(basis) < 1e-6 * std::pow(r, n)) continue;
        const auto ratio = integral_rep(n, h, p, rule) / basis;
        cal.spread = std::max(cal.spread, std::abs(ratio - c) / std::abs(c));
        ++cal.points_used;
    }
    return cal;
}

}  // namespace symmetria::laplace

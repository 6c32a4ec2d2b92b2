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

#include <complex>

namespace symmetria::elliptic {

using Complex = std::complex<double>;

/// Modulus k (not the parameter m = k²) with its complement and quarter periods.
/// K is +∞ at k = 1 and K' is +∞ at k = 0.
class EllipticModulus {
public:
    explicit EllipticModulus(double k);

    double k() const noexcept { return k_; }
    double k_prime() const noexcept { return k_prime_; }
    double quarter_period_K() const noexcept { return K_; }
    double quarter_period_K_prime() const noexcept { return K_prime_; }

private:
    double k_;
    double k_prime_;
    double K_;
    double K_prime_;
};

/// Complete elliptic integral of the first kind K(k) by the arithmetic-geometric mean.
/// Throws DivergenceError at k = 1 and DomainError outside [0, 1).
double quarter_period(double k);

template <typename T>
struct SnCnDn {
    T sn;
    T cn;
    T dn;
};

/// sn, cn, dn of a real argument, 0 ≤ k ≤ 1. Descending Landen / AGM amplitude.
SnCnDn<double> sn_cn_dn(double u, double k);

/// Distance below which a complex argument counts as sitting on a pole.
inline constexpr double pole_rejection_distance = 1e-6;

/// Nearest point of the pole lattice iK' + 2mK + 2niK' to z (k in (0, 1)).
Complex nearest_pole(Complex z, const EllipticModulus& modulus);

/// sn, cn, dn of a complex argument for 0 ≤ k < 1, assembled from real
/// evaluations at (Re z, k) and (Im z, k') through the addition theorem and
/// Jacobi's imaginary transformation. Throws PoleError near iK' + lattice.
SnCnDn<Complex> sn_cn_dn(Complex z, double k);

}  // namespace symmetria::elliptic

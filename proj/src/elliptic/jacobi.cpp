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

#include "symmetria/elliptic.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "symmetria/errors.hpp"

namespace symmetria::elliptic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_modulus(double k) {
    if (!(k >= 0.0 && k <= 1.0)) {
        std::ostringstream os;
        os << "elliptic modulus must lie in [0, 1], got " << k;
        throw DomainError(os.str());
    }
}

double complement(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

}  // namespace

double quarter_period(double k) {
    require_modulus(k);
    if (k == 1.0) throw DivergenceError("K(k) diverges logarithmically at k = 1");
    double a = 1.0;
    double b = complement(k);
    for (int i = 0; i < 64 && std::abs(a - b) > 1e-16 * a; ++i) {
        const double next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = next;
    }
    return std::numbers::pi / (2.0 * a);
}

EllipticModulus::EllipticModulus(double k) : k_(k) {
    require_modulus(k);
    k_prime_ = complement(k);
    K_ = k < 1.0 ? quarter_period(k) : kInf;
    K_prime_ = k > 0.0 ? quarter_period(k_prime_) : kInf;
}

SnCnDn<double> sn_cn_dn(double u, double k) {
    require_modulus(k);
    if (k == 0.0) return {std::sin(u), std::cos(u), 1.0};
    if (k == 1.0) {
        const double sech = 1.0 / std::cosh(u);
        return {std::tanh(u), sech, sech};
    }

    // Descending AGM: a_{n+1} = (a_n + b_n)/2, b_{n+1} = √(a_n b_n), c_{n+1} = (a_n − b_n)/2.
    constexpr int kMaxSteps = 32;
    std::array<double, kMaxSteps + 1> a{};
    std::array<double, kMaxSteps + 1> c{};
    a[0] = 1.0;
    double b = complement(k);
    c[0] = k;
    int n = 0;
    while (std::abs(c[static_cast<std::size_t>(n)]) > 1e-16 && n < kMaxSteps) {
        const auto i = static_cast<std::size_t>(n);
        a[i + 1] = 0.5 * (a[i] + b);
        c[i + 1] = 0.5 * (a[i] - b);
        b = std::sqrt(a[i] * b);
        ++n;
    }

    // Amplitude by back-substitution φ_{n−1} = (φ_n + asin(c_n/a_n · sin φ_n)) / 2.
    double phi = std::ldexp(1.0, n) * a[static_cast<std::size_t>(n)] * u;
    double phi_prev = phi;
    for (int i = n; i > 0; --i) {
        const auto idx = static_cast<std::size_t>(i);
        phi_prev = phi;
        phi = 0.5 * (phi + std::asin(c[idx] / a[idx] * std::sin(phi)));
    }
    const double sn = std::sin(phi);
    const double cn = std::cos(phi);
    double dn = 1.0;
    if (n > 0) {
        const double denom = std::cos(phi_prev - phi);
        dn = denom != 0.0 ? cn / denom : std::sqrt(1.0 - k * k * sn * sn);
    }
    return {sn, cn, dn};
}

Complex nearest_pole(Complex z, const EllipticModulus& modulus) {
    const double two_k = 2.0 * modulus.quarter_period_K();
    const double two_kp = 2.0 * modulus.quarter_period_K_prime();
    const double kp = modulus.quarter_period_K_prime();
    const double m = std::round(z.real() / two_k);
    const double n = std::round((z.imag() - kp) / two_kp);
    return {m * two_k, kp + n * two_kp};
}

SnCnDn<Complex> sn_cn_dn(Complex z, double k) {
    require_modulus(k);
    if (k == 1.0) throw DomainError("complex arguments need k < 1");
    if (k > 0.0) {
        const EllipticModulus modulus(k);
        const Complex pole = nearest_pole(z, modulus);
        if (std::abs(z - pole) < pole_rejection_distance) {
            std::ostringstream os;
            os << "argument " << z << " lies on the pole at " << pole;
            throw PoleError(os.str(), pole);
        }
    }

    const auto re = sn_cn_dn(z.real(), k);
    const auto im = sn_cn_dn(z.imag(), complement(k));
    const double s = re.sn, c = re.cn, d = re.dn;
    const double s1 = im.sn, c1 = im.cn, d1 = im.dn;
    const double k2 = k * k;
    const double denom = c1 * c1 + k2 * s * s * s1 * s1;
    if (denom == 0.0) throw PoleError("argument lies on a pole", z);
    return {
        Complex(s * d1, c * d * s1 * c1) / denom,
        Complex(c * c1, -s * d * s1 * d1) / denom,
        Complex(d * c1 * d1, -k2 * s * c * s1) / denom,
    };
}

}  // namespace symmetria::elliptic

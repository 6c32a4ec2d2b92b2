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
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "symmetria/numerics/matrix.hpp"

namespace symmetria::sklyanin {

using numerics::Complex;
using numerics::DenseMatrix;

struct ClassicalRParams {
    double rho;
    double k;

    /// rho > 0 and 0 <= k < 1, else DomainError.
    ClassicalRParams(double rho, double k);
};

struct QuantumRParams {
    double eta;
    double k;

    /// eta != 0 and 0 <= k < 1, else DomainError.
    QuantumRParams(double eta, double k);
};

/// Sampling keeps u, v and u − v at least this far from the real zeros of sn.
inline constexpr double pole_margin = 0.05;

/// Distance from real u to the nearest zero 2mK of sn(·, k).
double distance_to_sn_zero(double u, double k);

/// (w₁, w₂, w₃) = ρ (1, dn, cn) / sn at (u, k). PoleError at a zero of sn.
std::array<double, 3> classical_w(double u, const ClassicalRParams& p);

/// Σ_α c_α σ_α ⊗ σ_α.
DenseMatrix pauli_sum(const std::array<Complex, 3>& c);

DenseMatrix classical_r(double u, const ClassicalRParams& p);

using RMatrixFn = std::function<DenseMatrix(double)>;

/// sup |[r₁₂(u−v), r₁₃(u)] + [r₁₂(u−v), r₂₃(v)] + [r₁₃(u), r₂₃(v)]| on C²⊗C²⊗C².
double cybe_residual(const RMatrixFn& r, double u, double v);
double cybe_residual(double u, double v, const ClassicalRParams& p);

/// W_α(u) from complex sn, cn, dn at u + iη and iη.
std::array<Complex, 3> quantum_W(double u, const QuantumRParams& p);

DenseMatrix quantum_R(double u, const QuantumRParams& p);

/// sup |R₁₂(u−v)R₁₃(u)R₂₃(v) − R₂₃(v)R₁₃(u)R₁₂(u−v)|.
double qybe_residual(const RMatrixFn& R, double u, double v);
double qybe_residual(double u, double v, const QuantumRParams& p);

/// (W_α² − W_β²)/(W_γ² − 1) over the cyclic triples (1,2,3), (2,3,1), (3,1,2);
/// entry i belongs to the triple starting at α = i + 1.
std::array<Complex, 3> curve_constants(const std::array<Complex, 3>& W);

/// w_α² − w_β² over the same cyclic triples.
std::array<double, 3> quadric_constants(const std::array<double, 3>& w);

/// Swap operator on C² ⊗ C².
DenseMatrix swap_matrix();

/// `count` pairs (u, v) in [lo, hi]² with u, v, u − v all pole-free for modulus k.
std::vector<std::pair<double, double>> sample_pole_free_pairs(std::mt19937_64& rng, std::size_t count, double k,
                                                              double lo = 0.1, double hi = 2.0);

}  // namespace symmetria::sklyanin
